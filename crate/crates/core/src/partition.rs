//! Bicliques and ordered partitions over a flat vertex universe `1..=N`.
//!
//! The JSON form of a partition is
//! `{"n_vertices": N, "bicliques": [{"u": [...], "w": [...]}, ...]}` with
//! 1-based vertex indices and both sides sorted ascending. Serialization is
//! deterministic, so equal partitions produce identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A complete bipartite graph `B(U, W)` between two disjoint nonempty vertex
/// sets. The first side `U` and second side `W` are ordered: covering an edge
/// from `U` into `W` is distinct from covering it from `W` into `U`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biclique {
    #[serde(rename = "u")]
    pub first_side: Vec<u32>,
    #[serde(rename = "w")]
    pub second_side: Vec<u32>,
}

impl Biclique {
    /// Builds a biclique from two vertex sets, normalizing each side to
    /// sorted ascending order.
    ///
    /// Panics if the sides are not disjoint or either is empty; those are
    /// type invariants, not recoverable input conditions. Use
    /// [`OrderedPartition::validate`] for untrusted data.
    pub fn new(mut first_side: Vec<u32>, mut second_side: Vec<u32>) -> Self {
        first_side.sort_unstable();
        first_side.dedup();
        second_side.sort_unstable();
        second_side.dedup();
        assert!(
            !first_side.is_empty() && !second_side.is_empty(),
            "biclique sides must be nonempty"
        );
        assert!(
            sorted_disjoint(&first_side, &second_side),
            "biclique sides must be disjoint"
        );
        Self {
            first_side,
            second_side,
        }
    }

    /// Number of edges covered, `|U| * |W|`.
    pub fn edge_count(&self) -> u64 {
        self.first_side.len() as u64 * self.second_side.len() as u64
    }

    fn check(&self, universe: u32, ctx: &str) -> Result<()> {
        for (name, side) in [("u", &self.first_side), ("w", &self.second_side)] {
            if side.is_empty() {
                return Err(Error::InvalidPartition(format!("{ctx}.{name}: empty side")));
            }
            if !side.windows(2).all(|p| p[0] < p[1]) {
                return Err(Error::InvalidPartition(format!(
                    "{ctx}.{name}: not sorted strictly ascending"
                )));
            }
            if side[0] < 1 || *side.last().unwrap() > universe {
                return Err(Error::InvalidPartition(format!(
                    "{ctx}.{name}: vertex outside 1..={universe}"
                )));
            }
        }
        if !sorted_disjoint(&self.first_side, &self.second_side) {
            return Err(Error::InvalidPartition(format!(
                "{ctx}: sides are not disjoint"
            )));
        }
        Ok(())
    }
}

fn sorted_disjoint(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// An ordered sequence of bicliques over the universe `1..=n_vertices`,
/// candidate ordered biclique partition of the complete graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPartition {
    #[serde(rename = "n_vertices")]
    pub universe_size: u32,
    pub bicliques: Vec<Biclique>,
}

impl OrderedPartition {
    pub fn new(universe_size: u32, bicliques: Vec<Biclique>) -> Self {
        Self {
            universe_size,
            bicliques,
        }
    }

    /// Partition size `m`.
    pub fn len(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    /// Structural validation for untrusted inputs: every side sorted strictly
    /// ascending, nonempty, in range, and disjoint from its partner. Errors
    /// name the offending biclique in JSON-path style (`bicliques[3].u`).
    pub fn validate(&self) -> Result<()> {
        if self.universe_size < 1 {
            return Err(Error::InvalidPartition("n_vertices must be at least 1".into()));
        }
        for (idx, b) in self.bicliques.iter().enumerate() {
            b.check(self.universe_size, &format!("bicliques[{idx}]"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_normalizes_sides() {
        let b = Biclique::new(vec![3, 1], vec![2, 4, 2]);
        assert_eq!(b.first_side, vec![1, 3]);
        assert_eq!(b.second_side, vec![2, 4]);
        assert_eq!(b.edge_count(), 4);
    }

    #[test]
    #[should_panic(expected = "disjoint")]
    fn new_rejects_overlap() {
        let _ = Biclique::new(vec![1, 2], vec![2, 3]);
    }

    #[test]
    fn validate_reports_json_style_paths() {
        let p = OrderedPartition::new(
            4,
            vec![
                Biclique::new(vec![1], vec![2]),
                Biclique {
                    first_side: vec![2, 1],
                    second_side: vec![3],
                },
            ],
        );
        let err = p.validate().unwrap_err();
        assert!(err.to_string().contains("bicliques[1].u"), "{err}");

        let out_of_range = OrderedPartition::new(2, vec![Biclique::new(vec![1], vec![3])]);
        assert!(out_of_range.validate().is_err());
    }

    #[test]
    fn json_round_trip_matches_schema() {
        let p = OrderedPartition::new(
            6,
            vec![
                Biclique::new(vec![1, 2], vec![4, 6]),
                Biclique::new(vec![1, 3], vec![2, 5]),
            ],
        );
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            text,
            r#"{"n_vertices":6,"bicliques":[{"u":[1,2],"w":[4,6]},{"u":[1,3],"w":[2,5]}]}"#
        );
        let back: OrderedPartition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
