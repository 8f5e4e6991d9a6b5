//! Edge families of `K_{n^(2k-1)}`.
//!
//! The edge set is covered by three kinds of coordinate-defined families:
//!
//! * `C_i` (0 <= i <= k-1): endpoints differ at position `k+i` and agree at
//!   positions `i+1 ..= i+k-1`.
//! * `D_j` (1 <= j <= k-1): endpoints differ at position `j` and agree at the
//!   `k-1` positions `k+j, k+j+1, ...` taken cyclically modulo `2k-1`.
//! * `E_{i,j}` (1 <= j <= i <= k-1): endpoints differ at positions `j` and
//!   `k+i` and agree at positions `1 ..= j-1` and `k+j ..= k+i-1`.
//!
//! Every family is fully described by a per-coordinate constraint pattern
//! (agree / differ / don't care), which is the single source of truth used by
//! classification, law checking and the partition builder.

use std::fmt;

use crate::coords::VertexCoords;
use crate::error::{Error, Result};

/// Per-coordinate requirement an edge family places on an endpoint pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionConstraint {
    /// Endpoints must agree at this coordinate.
    Equal,
    /// Endpoints must differ at this coordinate.
    Differ,
    /// Coordinate is unconstrained.
    Free,
}

/// Full constraint pattern of a family over positions `1..=2k-1`
/// (index `p` holds the constraint for position `p+1`).
pub type ConstraintPattern = Vec<PositionConstraint>;

/// Identifier of one edge family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeFamilyId {
    C { i: usize },
    D { j: usize },
    E { i: usize, j: usize },
}

impl fmt::Display for EdgeFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeFamilyId::C { i } => write!(f, "C_{i}"),
            EdgeFamilyId::D { j } => write!(f, "D_{j}"),
            EdgeFamilyId::E { i, j } => write!(f, "E_{{{i},{j}}}"),
        }
    }
}

/// Maps a (possibly overflowing) 1-based position into `1..=2k-1` cyclically.
fn wrap_position(pos: usize, dim: usize) -> usize {
    (pos - 1) % dim + 1
}

impl EdgeFamilyId {
    /// Checks the parameter ranges for arity `k`:
    /// `C`: `0 <= i <= k-1`; `D`: `1 <= j <= k-1`; `E`: `1 <= j <= i <= k-1`.
    pub fn validate(&self, k: usize) -> Result<()> {
        if k < 1 {
            return Err(Error::InvalidArgument("arity k must be at least 1".into()));
        }
        let ok = match *self {
            EdgeFamilyId::C { i } => i <= k - 1,
            EdgeFamilyId::D { j } => 1 <= j && j <= k - 1,
            EdgeFamilyId::E { i, j } => 1 <= j && j <= i && i <= k - 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFamily { family: *self, k })
        }
    }

    /// All families for arity `k` in the canonical emission order:
    /// `C` by `i`, then `D` by `j`, then `E` by `(i, j)` lexicographic.
    pub fn all(k: usize) -> Vec<EdgeFamilyId> {
        let mut out = Vec::new();
        for i in 0..k {
            out.push(EdgeFamilyId::C { i });
        }
        for j in 1..k {
            out.push(EdgeFamilyId::D { j });
        }
        for i in 1..k {
            for j in 1..=i {
                out.push(EdgeFamilyId::E { i, j });
            }
        }
        out
    }

    /// The constraint pattern of this family over positions `1..=2k-1`.
    pub fn pattern(&self, k: usize) -> Result<ConstraintPattern> {
        self.validate(k)?;
        let dim = 2 * k - 1;
        let mut pat = vec![PositionConstraint::Free; dim];
        let mut set = |pos: usize, c: PositionConstraint| pat[pos - 1] = c;
        match *self {
            EdgeFamilyId::C { i } => {
                set(k + i, PositionConstraint::Differ);
                for l in 1..k {
                    set(i + l, PositionConstraint::Equal);
                }
            }
            EdgeFamilyId::D { j } => {
                set(j, PositionConstraint::Differ);
                // Equality positions k+j+l for l = 0..k-2 wrap modulo 2k-1,
                // landing on k+j..=2k-1 and then 1..=j-1.
                for l in 0..k - 1 {
                    set(wrap_position(k + j + l, dim), PositionConstraint::Equal);
                }
            }
            EdgeFamilyId::E { i, j } => {
                set(j, PositionConstraint::Differ);
                set(k + i, PositionConstraint::Differ);
                for l in 1..j {
                    set(l, PositionConstraint::Equal);
                }
                for l in (k + j)..(k + i) {
                    set(l, PositionConstraint::Equal);
                }
            }
        }
        Ok(pat)
    }

    /// Whether the unordered pair `{u, v}` belongs to this family.
    pub fn contains(&self, u: &VertexCoords, v: &VertexCoords) -> Result<bool> {
        let pat = self.pattern(u.k())?;
        Ok(pattern_matches(&pat, u, v))
    }
}

/// Evaluates a constraint pattern on an endpoint pair.
pub fn pattern_matches(pattern: &[PositionConstraint], u: &VertexCoords, v: &VertexCoords) -> bool {
    pattern_matches_raw(pattern, u.coords(), v.coords())
}

pub(crate) fn pattern_matches_raw(pattern: &[PositionConstraint], u: &[u32], v: &[u32]) -> bool {
    pattern.iter().enumerate().all(|(idx, c)| match c {
        PositionConstraint::Equal => u[idx] == v[idx],
        PositionConstraint::Differ => u[idx] != v[idx],
        PositionConstraint::Free => true,
    })
}

/// Every family containing the edge `{u, v}`, in canonical family order.
///
/// The result is never empty, contains at most one family of each kind, and
/// has size two only for a pair `{C_i, E_{i,j}}` sharing the same `i`.
pub fn classify_edge(u: &VertexCoords, v: &VertexCoords) -> Result<Vec<EdgeFamilyId>> {
    if !u.same_space(v) {
        return Err(Error::MismatchedParams {
            expected_n: u.n(),
            expected_k: u.k(),
            got_n: v.n(),
            got_k: v.k(),
        });
    }
    if u == v {
        return Err(Error::IdenticalVertices);
    }
    let k = u.k();
    EdgeFamilyId::all(k)
        .into_iter()
        .filter_map(|fam| match fam.contains(u, v) {
            Ok(true) => Some(Ok(fam)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}
