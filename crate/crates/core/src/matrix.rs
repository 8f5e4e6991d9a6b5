//! 0/1 matrices realized from ordered partitions, exact rank, and fooling
//! sets.
//!
//! The matrix of a partition sums the rank-one indicator matrices of its
//! bicliques; the ordered conditions keep every entry in `{0, 1}`, force a
//! zero diagonal, and make `M[k][l] + M[l][k]` equal 1 or 2 off the diagonal.
//! The full diagonal is then a 0-fooling set of size `N`, while the rank is
//! at most the partition size, which is the whole point of measuring both.
//!
//! Rank over the rationals uses fraction-free elimination on unbounded
//! integers (no floating point anywhere); rank over GF(2) uses elimination on
//! bit-packed rows.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::OrderedPartition;
use crate::verify::{orientation_counts, verify_ordered};

/// Dense square 0/1 matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanMatrix {
    order: usize,
    entries: Vec<u8>,
}

impl BooleanMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.order + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u8) {
        assert!(value <= 1, "entries are 0/1");
        self.entries[row * self.order + col] = value;
    }

    /// Text form: a line holding `N`, then `N` lines of `N` digits from
    /// `{0, 1}` with no separators, each newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.order * (self.order + 1) + 8);
        out.push_str(&self.order.to_string());
        out.push('\n');
        for row in 0..self.order {
            for col in 0..self.order {
                out.push(if self.get(row, col) == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text form, reporting the first offending byte on failure.
    pub fn parse_text(text: &str) -> std::result::Result<Self, MatrixTextError> {
        let bytes = text.as_bytes();
        let header_end = bytes
            .iter()
            .position(|&b| b == b'\n')
            .ok_or_else(|| MatrixTextError::new(bytes.len(), "missing newline after order"))?;
        let order: usize = text[..header_end].parse().map_err(|_| {
            let bad = bytes[..header_end]
                .iter()
                .position(|b| !b.is_ascii_digit())
                .unwrap_or(0);
            MatrixTextError::new(bad, "order must be a decimal integer")
        })?;
        let mut matrix = Self::zeros(order);
        let mut at = header_end + 1;
        for row in 0..order {
            for col in 0..order {
                match bytes.get(at) {
                    Some(b'0') => {}
                    Some(b'1') => matrix.set(row, col, 1),
                    Some(_) => return Err(MatrixTextError::new(at, "expected '0' or '1'")),
                    None => return Err(MatrixTextError::new(at, "unexpected end of matrix")),
                }
                at += 1;
            }
            match bytes.get(at) {
                Some(b'\n') => at += 1,
                Some(_) => return Err(MatrixTextError::new(at, "expected newline after row")),
                None => return Err(MatrixTextError::new(at, "missing newline after row")),
            }
        }
        if at != bytes.len() {
            return Err(MatrixTextError::new(at, "trailing data after matrix"));
        }
        Ok(matrix)
    }
}

/// Parse failure in the matrix text format, located by byte offset.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("byte {offset}: {message}")]
pub struct MatrixTextError {
    pub offset: usize,
    pub message: String,
}

impl MatrixTextError {
    fn new(offset: usize, message: &str) -> Self {
        Self {
            offset,
            message: message.to_string(),
        }
    }
}

/// Sums the biclique indicator matrices of a verified ordered partition.
/// Fails if any ordered pair is covered twice (the sum would leave `{0, 1}`).
pub fn partition_to_matrix(p: &OrderedPartition) -> Result<BooleanMatrix> {
    let counts = orientation_counts(p)?;
    let n = p.universe_size as usize;
    let mut matrix = BooleanMatrix::zeros(n);
    for row in 0..n {
        for col in 0..n {
            match counts[row * n + col] {
                0 => {}
                1 => matrix.set(row, col, 1),
                c => {
                    return Err(Error::InvalidPartition(format!(
                        "ordered pair ({}, {}) covered {c} times",
                        row + 1,
                        col + 1
                    )))
                }
            }
        }
    }
    Ok(matrix)
}

/// Field to take the rank over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankField {
    /// Exact rank over the rationals (equivalently, the reals).
    Rationals,
    /// Rank over the two-element field.
    Gf2,
}

/// Exact rank of `matrix` over the requested field.
pub fn rank_exact(matrix: &BooleanMatrix, field: RankField) -> usize {
    match field {
        RankField::Rationals => rank_rationals(matrix),
        RankField::Gf2 => rank_gf2(matrix),
    }
}

/// Fraction-free elimination: every intermediate entry is a minor of the
/// original matrix, so the division by the previous pivot is exact and no
/// rationals (or floats) ever appear.
fn rank_rationals(matrix: &BooleanMatrix) -> usize {
    let n = matrix.order;
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|r| (0..n).map(|c| BigInt::from(matrix.get(r, c))).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot_row) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (pivot_rows, rest) = rows.split_at_mut(rank + 1);
        let pivot = &pivot_rows[rank];
        for row in rest.iter_mut() {
            let lead = std::mem::replace(&mut row[col], BigInt::zero());
            for c in col + 1..n {
                let num = &row[c] * &pivot[col] - &lead * &pivot[c];
                debug_assert!((&num % &prev).is_zero(), "fraction-free step must divide");
                row[c] = num / &prev;
            }
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Elimination over GF(2) on 64-bit packed rows.
fn rank_gf2(matrix: &BooleanMatrix) -> usize {
    let n = matrix.order;
    let words = n.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut packed = vec![0u64; words];
            for c in 0..n {
                if matrix.get(r, c) == 1 {
                    packed[c / 64] |= 1 << (c % 64);
                }
            }
            packed
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let (word, bit) = (col / 64, col % 64);
        let Some(pivot_row) = (rank..n).find(|&r| rows[r][word] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (pivot_rows, rest) = rows.split_at_mut(rank + 1);
        let pivot = &pivot_rows[rank];
        for row in rest.iter_mut() {
            if row[word] >> bit & 1 == 1 {
                for (w, p) in row.iter_mut().zip(pivot) {
                    *w ^= p;
                }
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// A claimed fooling set: cell indices are 1-based, like vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoolingSetClaim {
    pub cells: Vec<(u32, u32)>,
    pub z: u8,
}

impl FoolingSetClaim {
    /// The full diagonal with value 0, the claim every partition matrix must
    /// satisfy.
    pub fn zero_diagonal(order: usize) -> Self {
        Self {
            cells: (1..=order as u32).map(|i| (i, i)).collect(),
            z: 0,
        }
    }
}

/// Checks the two fooling-set conditions: every claimed cell holds `z`, and
/// for any two claimed cells at least one of the cross entries differs from
/// `z`. Quadratic in the claim size.
pub fn verify_fooling_set(matrix: &BooleanMatrix, claim: &FoolingSetClaim) -> Result<bool> {
    if claim.z > 1 {
        return Err(Error::InvalidArgument(format!(
            "fooling value z={} must be 0 or 1",
            claim.z
        )));
    }
    let n = matrix.order as u32;
    let mut cells = claim.cells.clone();
    cells.sort_unstable();
    cells.dedup();
    for &(r, c) in &cells {
        if r < 1 || r > n || c < 1 || c > n {
            return Err(Error::InvalidArgument(format!(
                "cell ({r}, {c}) outside 1..={n}"
            )));
        }
    }
    let at = |r: u32, c: u32| matrix.get(r as usize - 1, c as usize - 1);
    if cells.iter().any(|&(r, c)| at(r, c) != claim.z) {
        return Ok(false);
    }
    for (idx, &(r1, c1)) in cells.iter().enumerate() {
        for &(r2, c2) in &cells[idx + 1..] {
            if at(r1, c2) == claim.z && at(r2, c1) == claim.z {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Measured gap between fooling-set size and rank for one partition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub n_vertices: u32,
    /// Partition size.
    #[serde(rename = "m")]
    pub partition_size: usize,
    #[serde(rename = "rank_q")]
    pub rank_rationals: usize,
    pub rank_gf2: usize,
    /// `N`: the verified zero diagonal.
    pub fool_lower_bound: u32,
    /// `ln(N) / ln(rank_q)`, the measured fooling-versus-rank exponent;
    /// absent when the rank is below 2.
    pub exponent: Option<f64>,
}

/// Builds the matrix of a verified ordered partition and measures the
/// rank/fooling-set gap. The diagonal fooling set is checked, not assumed.
pub fn gap_report(p: &OrderedPartition) -> Result<GapReport> {
    let (pass, report) = verify_ordered(p)?;
    if !pass {
        return Err(Error::InvalidPartition(format!(
            "not an ordered biclique partition: {}",
            report.summary()
        )));
    }
    let matrix = partition_to_matrix(p)?;
    let n = p.universe_size;
    let rank_q = rank_exact(&matrix, RankField::Rationals);
    let rank_2 = rank_exact(&matrix, RankField::Gf2);
    let diagonal_fools = verify_fooling_set(&matrix, &FoolingSetClaim::zero_diagonal(n as usize))?;
    assert!(diagonal_fools, "diagonal of a verified partition matrix must fool");
    assert!(rank_q <= p.len(), "rank cannot exceed the partition size");
    assert!(
        (n as u64) <= ((rank_q as u64 + 1) * (rank_q as u64 + 1)),
        "fooling set larger than (rank+1)^2"
    );
    let exponent = (rank_q >= 2).then(|| (n as f64).ln() / (rank_q as f64).ln());
    Ok(GapReport {
        n_vertices: n,
        partition_size: p.len(),
        rank_rationals: rank_q,
        rank_gf2: rank_2,
        fool_lower_bound: n,
        exponent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_partition;
    use crate::partition::Biclique;
    use crate::test_support::k6_partition;
    use num::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ones_minus_identity(order: usize) -> BooleanMatrix {
        let mut m = BooleanMatrix::zeros(order);
        for r in 0..order {
            for c in 0..order {
                if r != c {
                    m.set(r, c, 1);
                }
            }
        }
        m
    }

    #[test]
    fn matrix_of_single_biclique_on_k2() {
        let p = OrderedPartition::new(2, vec![Biclique::new(vec![1], vec![2])]);
        let m = partition_to_matrix(&p).unwrap();
        assert_eq!((m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)), (0, 1, 0, 0));
    }

    #[test]
    fn matrix_of_k6_example() {
        let m = partition_to_matrix(&k6_partition()).unwrap();
        let mut doubled = Vec::new();
        for r in 0..6 {
            assert_eq!(m.get(r, r), 0);
            for c in r + 1..6 {
                let sum = m.get(r, c) + m.get(c, r);
                assert!((1..=2).contains(&sum));
                if sum == 2 {
                    doubled.push((r as u32 + 1, c as u32 + 1));
                }
            }
        }
        assert_eq!(doubled, vec![(1, 6), (2, 3), (3, 4)]);
    }

    #[test]
    fn matrix_of_built_partition_has_pair_sums_in_range() {
        let p = build_partition(2, 2).unwrap();
        let m = partition_to_matrix(&p).unwrap();
        for r in 0..8 {
            assert_eq!(m.get(r, r), 0);
            for c in 0..8 {
                if r != c {
                    assert!((1..=2).contains(&(m.get(r, c) + m.get(c, r))));
                }
            }
        }
    }

    #[test]
    fn unordered_partition_is_rejected() {
        // Both bicliques cover the ordered pair (1, 2).
        let p = OrderedPartition::new(
            3,
            vec![
                Biclique::new(vec![1], vec![2, 3]),
                Biclique::new(vec![1, 3], vec![2]),
            ],
        );
        assert!(matches!(
            partition_to_matrix(&p),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn rank_of_zero_matrix() {
        let m = BooleanMatrix::zeros(3);
        assert_eq!(rank_exact(&m, RankField::Rationals), 0);
        assert_eq!(rank_exact(&m, RankField::Gf2), 0);
    }

    #[test]
    fn rank_of_ones_minus_identity() {
        let m = ones_minus_identity(3);
        assert_eq!(rank_exact(&m, RankField::Rationals), 3);
        assert_eq!(rank_exact(&m, RankField::Gf2), 2);
    }

    /// Independent oracle: Gaussian elimination over arbitrary-precision
    /// rationals, sharing no code with the fraction-free path.
    fn rational_rank_oracle(m: &BooleanMatrix) -> usize {
        let n = m.order();
        let mut rows: Vec<Vec<BigRational>> = (0..n)
            .map(|r| (0..n).map(|c| BigRational::from_integer(m.get(r, c).into())).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| rows[r][col] != BigRational::zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].recip();
            for c in col..n {
                let scaled = &rows[rank][c] * &inv;
                rows[rank][c] = scaled;
            }
            for r in 0..n {
                if r != rank && rows[r][col] != BigRational::zero() {
                    let factor = rows[r][col].clone();
                    for c in col..n {
                        let delta = &factor * &rows[rank][c];
                        rows[r][c] -= delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Independent oracle: boolean elimination on unpacked rows.
    fn gf2_rank_oracle(m: &BooleanMatrix) -> usize {
        let n = m.order();
        let mut rows: Vec<Vec<bool>> = (0..n)
            .map(|r| (0..n).map(|c| m.get(r, c) == 1).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| rows[r][col]) else {
                continue;
            };
            rows.swap(rank, p);
            for r in 0..n {
                if r != rank && rows[r][col] {
                    let pivot = rows[rank].clone();
                    for (cell, pv) in rows[r].iter_mut().zip(pivot) {
                        *cell ^= pv;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_agrees_with_oracles_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0b1c);
        for trial in 0..100 {
            let order = rng.gen_range(1..=12);
            let mut m = BooleanMatrix::zeros(order);
            for r in 0..order {
                for c in 0..order {
                    if rng.gen_bool(0.5) {
                        m.set(r, c, 1);
                    }
                }
            }
            assert_eq!(
                rank_exact(&m, RankField::Rationals),
                rational_rank_oracle(&m),
                "trial {trial}"
            );
            assert_eq!(
                rank_exact(&m, RankField::Gf2),
                gf2_rank_oracle(&m),
                "trial {trial}"
            );
        }
    }

    #[test]
    fn rank_bounded_by_partition_size() {
        for (n, k) in [(2u32, 2usize), (3, 2), (2, 3)] {
            let p = build_partition(n, k).unwrap();
            let m = partition_to_matrix(&p).unwrap();
            assert!(rank_exact(&m, RankField::Rationals) <= p.len());
        }
    }

    #[test]
    fn fooling_set_examples() {
        let m6 = partition_to_matrix(&k6_partition()).unwrap();
        assert!(verify_fooling_set(&m6, &FoolingSetClaim::zero_diagonal(6)).unwrap());

        let mut m = BooleanMatrix::zeros(2);
        m.set(0, 1, 1);
        assert!(verify_fooling_set(&m, &FoolingSetClaim::zero_diagonal(2)).unwrap());

        let zero = BooleanMatrix::zeros(2);
        assert!(!verify_fooling_set(&zero, &FoolingSetClaim::zero_diagonal(2)).unwrap());

        let claim = FoolingSetClaim {
            cells: vec![(1, 3)],
            z: 0,
        };
        assert!(matches!(
            verify_fooling_set(&zero, &claim),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn gap_report_on_small_instances() {
        let report = gap_report(&build_partition(3, 2).unwrap()).unwrap();
        assert_eq!(report.n_vertices, 27);
        assert_eq!(report.partition_size, 24);
        assert_eq!(report.fool_lower_bound, 27);
        assert!(report.rank_rationals <= 24);
        assert!(27 <= (report.rank_rationals as u32 + 1).pow(2));
        let expected = (27f64).ln() / (report.rank_rationals as f64).ln();
        assert!((report.exponent.unwrap() - expected).abs() < 1e-12);

        let tiny = OrderedPartition::new(2, vec![Biclique::new(vec![1], vec![2])]);
        let report = gap_report(&tiny).unwrap();
        assert_eq!(report.rank_rationals, 1);
        assert_eq!(report.exponent, None);
        assert_eq!(report.fool_lower_bound, 2);
    }

    #[test]
    fn gap_report_rejects_incomplete_partition() {
        let p = OrderedPartition::new(3, vec![Biclique::new(vec![1], vec![2])]);
        assert!(matches!(gap_report(&p), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn text_format_round_trip_and_errors() {
        let m = partition_to_matrix(&k6_partition()).unwrap();
        let text = m.to_text();
        assert!(text.starts_with("6\n"));
        assert_eq!(BooleanMatrix::parse_text(&text).unwrap(), m);

        let err = BooleanMatrix::parse_text("2\n01\n0\n").unwrap_err();
        assert_eq!(err.offset, 6);
        let err = BooleanMatrix::parse_text("2\n0x\n00\n").unwrap_err();
        assert_eq!(err.offset, 3);
        let err = BooleanMatrix::parse_text("x\n").unwrap_err();
        assert_eq!(err.offset, 0);
        let err = BooleanMatrix::parse_text("1\n0\nextra").unwrap_err();
        assert_eq!(err.offset, 4);
    }
}
