//! Exact minimum biclique cover sizes for small complete graphs.
//!
//! The search assigns every vertex a label word of length `m` over
//! {absent, first side, second side}; word `i` of a vertex records its role
//! in biclique `i`. All three cover notions become local constraints on the
//! pair of words of two vertices:
//!
//! * partition: exactly one position pairs a first-side with a second-side
//!   label (in either orientation);
//! * 1-or-2 cover: one or two such positions;
//! * ordered: at most one position per orientation, at least one overall.
//!
//! Vertices are assigned in index order, depth-first, words enumerated in
//! ascending lexicographic order, so the first solution found is the
//! lexicographically least one. Two symmetry breaks keep `K_6` tractable,
//! both sound because complete graphs are vertex-transitive and biclique
//! indices are interchangeable: rows (vertex words) are forced
//! lexicographically non-decreasing, and columns (bicliques) are forced
//! lexicographically non-decreasing prefix-by-prefix. Every matrix of words
//! has a row-and-column-sorted equivalent, so no cover size is missed.
//!
//! The budget is a node count (words examined), which makes the
//! unknown/known outcome reproducible across runs and machines.

use crate::error::{Error, Result};
use crate::partition::{Biclique, OrderedPartition};
use crate::verify::{orientation_counts, verify_ordered};

/// Which covering notion to search for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    /// Every edge in exactly one biclique.
    Partition,
    /// Every edge in one or two bicliques.
    TwoCover,
    /// One-or-two cover with opposite orientations on doubly covered edges.
    Ordered,
}

/// Default node budget for a search call.
pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000_000;

const ABSENT: u8 = 0;
const FIRST: u8 = 1;
const SECOND: u8 = 2;

/// Outcome of a fixed-size feasibility search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A verified witness with at most `m` bicliques.
    Found(OrderedPartition),
    /// The whole (symmetry-reduced) space was exhausted: no witness exists.
    Infeasible,
    /// The node budget ran out before the space was exhausted.
    BudgetExhausted,
}

/// Outcome of a minimum-size search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinCoverOutcome {
    Known {
        value: usize,
        witness: OrderedPartition,
    },
    /// Budget ran out; the minimum lies in `lower..=upper`.
    Unknown { lower: usize, upper: usize },
}

/// Searches for a cover of `K_{n_vertices}` with at most `m` bicliques.
pub fn feasible(
    n_vertices: u32,
    m: usize,
    mode: CoverMode,
    max_nodes: u64,
) -> Result<SearchOutcome> {
    if n_vertices < 2 {
        return Err(Error::InvalidArgument(
            "search needs at least 2 vertices".into(),
        ));
    }
    if m < 1 {
        return Err(Error::InvalidArgument(
            "search needs at least 1 biclique".into(),
        ));
    }
    let mut budget = NodeBudget {
        used: 0,
        max: max_nodes,
    };
    Ok(search_fixed_size(n_vertices as usize, m, mode, &mut budget))
}

/// Smallest cover size for `K_{n_vertices}` under `mode`, by incrementing the
/// candidate size from the distinguishing lower bound `ceil(log2 n)` (any two
/// vertices with the same first-side set share no first/second clash, so `m`
/// bicliques can cover at most `2^m` vertices). The budget is shared across
/// all sizes tried.
pub fn min_cover_size(n_vertices: u32, mode: CoverMode, max_nodes: u64) -> Result<MinCoverOutcome> {
    if n_vertices < 2 {
        return Err(Error::InvalidArgument(
            "search needs at least 2 vertices".into(),
        ));
    }
    let n = n_vertices as usize;
    let star_upper = n - 1;
    let lower = ceil_log2(n_vertices).max(1);
    let mut budget = NodeBudget {
        used: 0,
        max: max_nodes,
    };
    for m in lower..=star_upper {
        match search_fixed_size(n, m, mode, &mut budget) {
            SearchOutcome::Found(witness) => {
                debug_assert_eq!(witness.len(), m);
                return Ok(MinCoverOutcome::Known {
                    value: witness.len(),
                    witness,
                });
            }
            SearchOutcome::Infeasible => continue,
            SearchOutcome::BudgetExhausted => {
                return Ok(MinCoverOutcome::Unknown {
                    lower: m,
                    upper: star_upper,
                });
            }
        }
    }
    unreachable!("the star partition is a witness at m = n - 1 for every mode");
}

fn ceil_log2(n: u32) -> usize {
    debug_assert!(n >= 2);
    (32 - (n - 1).leading_zeros()) as usize
}

struct NodeBudget {
    used: u64,
    max: u64,
}

impl NodeBudget {
    fn spend(&mut self) -> bool {
        self.used += 1;
        self.used <= self.max
    }
}

enum DfsResult {
    Found,
    Exhausted,
    Budget,
}

struct Searcher {
    n: usize,
    m: usize,
    mode: CoverMode,
    words: Vec<Vec<u8>>,
    /// Per-depth run ids over columns: columns sharing a run id have equal
    /// prefixes and must receive non-decreasing labels at the next row.
    runs: Vec<Vec<u32>>,
    /// Per-depth, per-column: whether a first/second-side label has appeared.
    has_first: Vec<Vec<bool>>,
    has_second: Vec<Vec<bool>>,
}

fn search_fixed_size(n: usize, m: usize, mode: CoverMode, budget: &mut NodeBudget) -> SearchOutcome {
    let mut searcher = Searcher {
        n,
        m,
        mode,
        words: Vec::with_capacity(n),
        runs: vec![vec![0; m]],
        has_first: vec![vec![false; m]],
        has_second: vec![vec![false; m]],
    };
    match searcher.assign(0, budget) {
        DfsResult::Found => {
            let witness = searcher.extract();
            assert!(
                witness_valid(&witness, mode),
                "search produced a witness failing its own verifier"
            );
            SearchOutcome::Found(witness)
        }
        DfsResult::Exhausted => SearchOutcome::Infeasible,
        DfsResult::Budget => SearchOutcome::BudgetExhausted,
    }
}

impl Searcher {
    fn assign(&mut self, v: usize, budget: &mut NodeBudget) -> DfsResult {
        if v == self.n {
            return DfsResult::Found;
        }
        // Rows are non-decreasing, so enumeration starts at the previous
        // row's word; equal words die on the pair constraint.
        let mut word = if v == 0 {
            vec![ABSENT; self.m]
        } else {
            self.words[v - 1].clone()
        };
        loop {
            if !budget.spend() {
                return DfsResult::Budget;
            }
            if self.admissible(v, &word) {
                self.push(v, word.clone());
                match self.assign(v + 1, budget) {
                    DfsResult::Exhausted => self.pop(),
                    done => return done,
                }
            }
            if !next_word(&mut word) {
                return DfsResult::Exhausted;
            }
        }
    }

    fn admissible(&self, v: usize, word: &[u8]) -> bool {
        // Column-sorting: within a run of columns with identical prefixes,
        // labels must be non-decreasing.
        let runs = &self.runs[v];
        for c in 1..self.m {
            if runs[c] == runs[c - 1] && word[c - 1] > word[c] {
                return false;
            }
        }
        // Pair constraints against every assigned vertex.
        for earlier in &self.words {
            let mut forward = 0u32;
            let mut backward = 0u32;
            for (a, b) in earlier.iter().zip(word) {
                match (*a, *b) {
                    (FIRST, SECOND) => forward += 1,
                    (SECOND, FIRST) => backward += 1,
                    _ => {}
                }
            }
            let ok = match self.mode {
                CoverMode::Partition => forward + backward == 1,
                CoverMode::TwoCover => (1..=2).contains(&(forward + backward)),
                CoverMode::Ordered => forward <= 1 && backward <= 1 && forward + backward >= 1,
            };
            if !ok {
                return false;
            }
        }
        // Every used column still needs a first and a second side; prune when
        // the remaining rows cannot supply them.
        let rows_left = self.n - 1 - v;
        for c in 0..self.m {
            let first = self.has_first[v][c] || word[c] == FIRST;
            let second = self.has_second[v][c] || word[c] == SECOND;
            if first || second {
                let missing = usize::from(!first) + usize::from(!second);
                if missing > rows_left {
                    return false;
                }
            }
        }
        true
    }

    fn push(&mut self, v: usize, word: Vec<u8>) {
        let prev_runs = &self.runs[v];
        let mut next_runs = vec![0u32; self.m];
        let mut run = 0u32;
        for c in 1..self.m {
            if prev_runs[c] != prev_runs[c - 1] || word[c] != word[c - 1] {
                run += 1;
            }
            next_runs[c] = run;
        }
        let next_first: Vec<bool> = (0..self.m)
            .map(|c| self.has_first[v][c] || word[c] == FIRST)
            .collect();
        let next_second: Vec<bool> = (0..self.m)
            .map(|c| self.has_second[v][c] || word[c] == SECOND)
            .collect();
        self.runs.push(next_runs);
        self.has_first.push(next_first);
        self.has_second.push(next_second);
        self.words.push(word);
    }

    fn pop(&mut self) {
        self.words.pop();
        self.runs.pop();
        self.has_first.pop();
        self.has_second.pop();
    }

    fn extract(&self) -> OrderedPartition {
        let bicliques = (0..self.m)
            .filter_map(|c| {
                let first: Vec<u32> = (0..self.n)
                    .filter(|&v| self.words[v][c] == FIRST)
                    .map(|v| v as u32 + 1)
                    .collect();
                let second: Vec<u32> = (0..self.n)
                    .filter(|&v| self.words[v][c] == SECOND)
                    .map(|v| v as u32 + 1)
                    .collect();
                if first.is_empty() && second.is_empty() {
                    None
                } else {
                    Some(Biclique::new(first, second))
                }
            })
            .collect();
        OrderedPartition::new(self.n as u32, bicliques)
    }
}

/// Advances a word in ascending lexicographic order (last position least
/// significant); false once the all-`SECOND` word has been passed.
fn next_word(word: &mut [u8]) -> bool {
    for slot in word.iter_mut().rev() {
        if *slot < SECOND {
            *slot += 1;
            return true;
        }
        *slot = ABSENT;
    }
    false
}

/// The verifier matching a search mode.
pub fn witness_valid(p: &OrderedPartition, mode: CoverMode) -> bool {
    match mode {
        CoverMode::Ordered => matches!(verify_ordered(p), Ok((true, _))),
        CoverMode::Partition | CoverMode::TwoCover => {
            let Ok(counts) = orientation_counts(p) else {
                return false;
            };
            let n = p.universe_size as usize;
            let cap = if matches!(mode, CoverMode::Partition) { 1 } else { 2 };
            (0..n).all(|a| {
                (a + 1..n).all(|b| {
                    let total = counts[a * n + b] + counts[b * n + a];
                    total >= 1 && total <= cap
                })
            })
        }
    }
}
