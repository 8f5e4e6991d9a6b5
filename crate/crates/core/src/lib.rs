//! Ordered biclique partitions of complete graphs.
//!
//! An ordered biclique partition of `K_N` covers every edge with one or two
//! bicliques, and any doubly covered edge with opposite orientations: each
//! endpoint lies once in a first side and once in a second side. This crate
//! provides
//!
//! * an explicit construction of such a partition of `K_{n^(2k-1)}` with
//!   `(2k-1) n^(k-1) (n-1) + sum_i i n^i (n-1)` bicliques ([`build_partition`]),
//! * brute-force certification of arbitrary candidates ([`verify_ordered`])
//!   and of the edge-family laws behind the construction
//!   ([`verify_family_laws`]),
//! * the induced 0/1 matrix with exact rank over the rationals and GF(2) and
//!   fooling-set verification ([`partition_to_matrix`], [`rank_exact`],
//!   [`gap_report`]) — the matrix of an `N`-vertex instance has a fooling set
//!   of size `N` while its rank is at most the partition size,
//! * an exact searcher for minimum cover sizes of small complete graphs in
//!   partition, 1-or-2 cover, and ordered modes ([`min_cover_size`]).

pub mod construct;
pub mod coords;
pub mod error;
pub mod family;
pub mod matrix;
pub mod partition;
pub mod search;
pub mod verify;

pub use construct::{
    build_family_bicliques, build_family_bicliques_with_ordering, build_partition,
    build_partition_with_budget, predicted_size, size_exponent, star_partition, Direction,
    StarOrdering, DEFAULT_VERTEX_BUDGET,
};
pub use coords::{coords_of, index_of, universe_size, VertexCoords};
pub use error::{Error, Result};
pub use family::{classify_edge, ConstraintPattern, EdgeFamilyId, PositionConstraint};
pub use matrix::{
    gap_report, partition_to_matrix, rank_exact, verify_fooling_set, BooleanMatrix,
    FoolingSetClaim, GapReport, MatrixTextError, RankField,
};
pub use partition::{Biclique, OrderedPartition};
pub use search::{
    feasible, min_cover_size, witness_valid, CoverMode, MinCoverOutcome, SearchOutcome,
    DEFAULT_SEARCH_BUDGET,
};
pub use verify::{
    check_family_laws_with_patterns, coverage_report, verify_family_laws,
    verify_family_laws_with_budget, verify_ordered, CoverageReport, FamilyLawReport,
    FamilyLawViolation, Violation, ViolationKind,
};

#[cfg(test)]
pub(crate) mod test_support {
    use crate::coords::universe_size;
    use crate::partition::{Biclique, OrderedPartition};

    /// All `(n, k)` with `n^(2k-1) <= limit`.
    pub fn small_spaces(limit: u64) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        for k in 1..=8usize {
            for n in 2..=limit.min(u32::MAX as u64) as u32 {
                match universe_size(n, k) {
                    Some(size) if size <= limit => out.push((n, k)),
                    _ => break,
                }
            }
        }
        out
    }

    /// The four-biclique ordered partition of `K_6` used as a fixture
    /// throughout: doubly covers exactly {1,6}, {2,3} and {3,4}.
    pub fn k6_partition() -> OrderedPartition {
        OrderedPartition::new(
            6,
            vec![
                Biclique::new(vec![1, 2], vec![4, 6]),
                Biclique::new(vec![1, 3], vec![2, 5]),
                Biclique::new(vec![3, 6], vec![1, 4]),
                Biclique::new(vec![2, 4, 6], vec![3, 5]),
            ],
        )
    }
}
