//! Benchmark-only crate; see `benches/obp.rs`.
