use criterion::{black_box, criterion_group, criterion_main, Criterion};
use obp_core::{
    build_partition, min_cover_size, partition_to_matrix, rank_exact, verify_ordered, CoverMode,
    RankField, DEFAULT_SEARCH_BUDGET,
};

fn bench_construct(c: &mut Criterion) {
    c.bench_function("build_partition 3,2 (K27)", |b| {
        b.iter(|| build_partition(black_box(3), black_box(2)).unwrap())
    });
    c.bench_function("build_partition 3,3 (K243)", |b| {
        b.iter(|| build_partition(black_box(3), black_box(3)).unwrap())
    });
}

fn bench_verify(c: &mut Criterion) {
    let p = build_partition(3, 3).unwrap();
    c.bench_function("verify_ordered K243", |b| {
        b.iter(|| verify_ordered(black_box(&p)).unwrap())
    });
}

fn bench_rank(c: &mut Criterion) {
    let m = partition_to_matrix(&build_partition(3, 2).unwrap()).unwrap();
    c.bench_function("rank_q K27", |b| {
        b.iter(|| rank_exact(black_box(&m), RankField::Rationals))
    });
    c.bench_function("rank_gf2 K27", |b| {
        b.iter(|| rank_exact(black_box(&m), RankField::Gf2))
    });
}

fn bench_search(c: &mut Criterion) {
    c.bench_function("min ordered cover K5", |b| {
        b.iter(|| min_cover_size(black_box(5), CoverMode::Ordered, DEFAULT_SEARCH_BUDGET).unwrap())
    });
}

criterion_group!(benches, bench_construct, bench_verify, bench_rank, bench_search);
criterion_main!(benches);
