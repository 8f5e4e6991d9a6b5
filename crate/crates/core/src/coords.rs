//! Vertex indexing for the complete graph on `[n]^(2k-1)`.
//!
//! Vertices carry two interchangeable identities: a coordinate tuple
//! `(x_1, ..., x_{2k-1})` with every entry in `1..=n`, and a flat 1-based
//! index into `1..=n^(2k-1)`. The bijection is mixed radix with `x_1` least
//! significant:
//!
//! ```text
//! index = 1 + sum_t (x_t - 1) * n^(t-1)
//! ```

use crate::error::{Error, Result};

/// A vertex of `K_{n^(2k-1)}` as a coordinate tuple over `[n]`.
///
/// Coordinates are 1-based throughout, matching the convention used by the
/// edge-family definitions and all reported diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexCoords {
    n: u32,
    k: usize,
    coords: Vec<u32>,
}

impl VertexCoords {
    /// Builds a vertex from its coordinate tuple, validating the type
    /// invariants: `coords.len() == 2k-1`, every entry in `1..=n`, and the
    /// universe size `n^(2k-1)` representable in a `u64`.
    pub fn new(n: u32, k: usize, coords: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCoords(format!("base n={n} must be at least 2")));
        }
        if k < 1 {
            return Err(Error::InvalidCoords("arity k must be at least 1".into()));
        }
        let dim = 2 * k - 1;
        if coords.len() != dim {
            return Err(Error::InvalidCoords(format!(
                "expected {dim} coordinates for k={k}, got {}",
                coords.len()
            )));
        }
        if let Some(pos) = coords.iter().position(|&c| c < 1 || c > n) {
            return Err(Error::InvalidCoords(format!(
                "coordinate x_{} = {} outside 1..={n}",
                pos + 1,
                coords[pos]
            )));
        }
        if universe_size(n, k).is_none() {
            return Err(Error::InvalidCoords(format!(
                "universe n^(2k-1) = {n}^{dim} does not fit in 64 bits"
            )));
        }
        Ok(Self { n, k, coords })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of coordinates, `2k - 1`.
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// The coordinate at 1-based position `pos`.
    pub fn coord(&self, pos: usize) -> u32 {
        self.coords[pos - 1]
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn same_space(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k
    }
}

/// `n^(2k-1)` if it fits in a `u64`.
pub fn universe_size(n: u32, k: usize) -> Option<u64> {
    let exp = u32::try_from(2 * k - 1).ok()?;
    (n as u64).checked_pow(exp)
}

/// Flat 1-based index of a vertex; inverse of [`coords_of`].
pub fn index_of(v: &VertexCoords) -> u64 {
    let n = v.n as u64;
    // x_1 is least significant, so fold from the most significant end down.
    v.coords
        .iter()
        .rev()
        .fold(0u64, |acc, &x| acc * n + (x as u64 - 1))
        + 1
}

/// Vertex with flat index `index` in `1..=n^(2k-1)`; inverse of [`index_of`].
pub fn coords_of(index: u64, n: u32, k: usize) -> Result<VertexCoords> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidCoords(format!(
            "parameters out of range: n={n}, k={k}"
        )));
    }
    let max = universe_size(n, k).ok_or_else(|| {
        Error::InvalidCoords(format!("universe {n}^{} does not fit in 64 bits", 2 * k - 1))
    })?;
    if index < 1 || index > max {
        return Err(Error::IndexOutOfRange { index, max });
    }
    let mut rest = index - 1;
    let coords = (0..2 * k - 1)
        .map(|_| {
            let digit = (rest % n as u64) as u32 + 1;
            rest /= n as u64;
            digit
        })
        .collect();
    VertexCoords::new(n, k, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vc(n: u32, k: usize, coords: &[u32]) -> VertexCoords {
        VertexCoords::new(n, k, coords.to_vec()).unwrap()
    }

    #[test]
    fn index_of_known_values() {
        assert_eq!(index_of(&vc(2, 2, &[1, 1, 1])), 1);
        assert_eq!(index_of(&vc(2, 2, &[2, 1, 1])), 2);
        // 1 + 0*1 + 1*3 + 2*9
        assert_eq!(index_of(&vc(3, 2, &[1, 2, 3])), 22);
    }

    #[test]
    fn coords_of_known_values() {
        assert_eq!(coords_of(1, 2, 2).unwrap(), vc(2, 2, &[1, 1, 1]));
        assert_eq!(coords_of(8, 2, 2).unwrap(), vc(2, 2, &[2, 2, 2]));
        assert_eq!(coords_of(22, 3, 2).unwrap(), vc(3, 2, &[1, 2, 3]));
    }

    #[test]
    fn coords_of_rejects_out_of_range() {
        assert!(matches!(
            coords_of(0, 2, 2),
            Err(Error::IndexOutOfRange { index: 0, max: 8 })
        ));
        assert!(matches!(
            coords_of(9, 2, 2),
            Err(Error::IndexOutOfRange { index: 9, max: 8 })
        ));
    }

    #[test]
    fn new_rejects_bad_tuples() {
        assert!(VertexCoords::new(2, 2, vec![1, 1]).is_err());
        assert!(VertexCoords::new(2, 2, vec![1, 0, 1]).is_err());
        assert!(VertexCoords::new(2, 2, vec![1, 3, 1]).is_err());
        assert!(VertexCoords::new(1, 2, vec![1, 1, 1]).is_err());
    }

    #[test]
    fn round_trip_exhaustive_small_spaces() {
        for (n, k) in [(2u32, 1usize), (5, 1), (2, 2), (3, 2), (2, 3)] {
            let max = universe_size(n, k).unwrap();
            for index in 1..=max {
                let v = coords_of(index, n, k).unwrap();
                assert_eq!(index_of(&v), index, "n={n} k={k} index={index}");
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_tuples(n in 2u32..=7, k in 1usize..=4, seed in 0u64..) {
            let dim = 2 * k - 1;
            let coords: Vec<u32> = (0..dim)
                .map(|t| ((seed >> (8 * (t % 8))) as u32 % n) + 1)
                .collect();
            let v = VertexCoords::new(n, k, coords).unwrap();
            let back = coords_of(index_of(&v), n, k).unwrap();
            prop_assert_eq!(back, v);
        }
    }
}
