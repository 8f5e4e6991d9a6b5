//! Brute-force certification of candidate partitions and of the edge-family
//! laws.
//!
//! The ordered condition is checked through an orientation-count table: for
//! each ordered pair `(u, v)` we count the bicliques with `u` in the first
//! side and `v` in the second. A partition is ordered iff every ordered pair
//! is covered at most once and every unordered pair at least once.

use serde::Serialize;

use crate::construct::DEFAULT_VERTEX_BUDGET;
use crate::coords::{coords_of, universe_size};
use crate::error::{Error, Result};
use crate::family::{pattern_matches_raw, ConstraintPattern, EdgeFamilyId, PositionConstraint};
use crate::partition::OrderedPartition;

/// Why an edge fails the ordered-partition conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Covered by no biclique.
    Uncovered,
    /// Covered more than twice.
    OverCovered,
    /// Covered twice with the endpoints in the same sides both times.
    SameOrientationDouble,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub edge: (u32, u32),
    pub kind: ViolationKind,
}

/// Per-edge coverage census of a candidate partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub once_count: u64,
    pub twice_count: u64,
    /// The edges counted by `twice_count`, sorted.
    pub doubly_covered: Vec<(u32, u32)>,
    pub violations: Vec<Violation>,
}

impl CoverageReport {
    /// True iff the partition satisfies the ordered conditions.
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} once, {} twice, {} violations",
            self.once_count,
            self.twice_count,
            self.violations.len()
        )
    }
}

/// Bicliques covering each ordered pair, flattened row-major:
/// entry `(u-1) * n + (v-1)` counts bicliques with `u` first-side and `v`
/// second-side.
pub(crate) fn orientation_counts(p: &OrderedPartition) -> Result<Vec<u32>> {
    p.validate()?;
    let n = p.universe_size as usize;
    let mut counts = vec![0u32; n * n];
    for b in &p.bicliques {
        for &u in &b.first_side {
            let row = (u as usize - 1) * n;
            for &w in &b.second_side {
                counts[row + w as usize - 1] += 1;
            }
        }
    }
    Ok(counts)
}

/// Classifies every edge of `K_N` against the candidate partition.
pub fn coverage_report(p: &OrderedPartition) -> Result<CoverageReport> {
    let counts = orientation_counts(p)?;
    let n = p.universe_size as usize;
    let mut report = CoverageReport {
        once_count: 0,
        twice_count: 0,
        doubly_covered: Vec::new(),
        violations: Vec::new(),
    };
    for a in 0..n {
        for b in a + 1..n {
            let ab = counts[a * n + b];
            let ba = counts[b * n + a];
            let edge = (a as u32 + 1, b as u32 + 1);
            match ab + ba {
                0 => report.violations.push(Violation {
                    edge,
                    kind: ViolationKind::Uncovered,
                }),
                1 => report.once_count += 1,
                2 if ab == 1 => {
                    report.twice_count += 1;
                    report.doubly_covered.push(edge);
                }
                2 => report.violations.push(Violation {
                    edge,
                    kind: ViolationKind::SameOrientationDouble,
                }),
                _ => report.violations.push(Violation {
                    edge,
                    kind: ViolationKind::OverCovered,
                }),
            }
        }
    }
    Ok(report)
}

/// Runs [`coverage_report`] and folds it into a pass/fail verdict.
pub fn verify_ordered(p: &OrderedPartition) -> Result<(bool, CoverageReport)> {
    let report = coverage_report(p)?;
    Ok((report.pass(), report))
}

/// A counterexample to one of the edge-family laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyLawViolation {
    /// Edge in no family.
    Uncovered { edge: (u64, u64) },
    /// Edge in a family combination other than a single family or a
    /// `{C_i, E_{i,j}}` pair.
    IllegalOverlap {
        edge: (u64, u64),
        families: Vec<EdgeFamilyId>,
    },
    /// `C_i` and `E_{i,j}` membership disagrees with the closed-form
    /// description of their intersection.
    IntersectionMismatch {
        edge: (u64, u64),
        i: usize,
        j: usize,
        in_families: bool,
        in_closed_form: bool,
    },
    /// Edge agreeing on the first `k-1` coordinates that no `C_i` covers.
    MissingFromC { edge: (u64, u64) },
    /// `D_j` together with the `E_{i,j}` column disagrees with the pairs
    /// differing at `j` and agreeing before it.
    DColumnMismatch {
        edge: (u64, u64),
        j: usize,
        in_union: bool,
        in_closed_form: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyLawReport {
    pub pairs_checked: u64,
    pub violations: Vec<FamilyLawViolation>,
}

impl FamilyLawReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Closed-form pattern of the `C_i`/`E_{i,j}` intersection: endpoints differ
/// at `j` and `k+i` and agree at `1..=j-1` and `i+1..=k+i-1`. Built directly
/// from the index ranges, independent of the family patterns it checks.
fn intersection_pattern(i: usize, j: usize, k: usize) -> ConstraintPattern {
    let mut pat = vec![PositionConstraint::Free; 2 * k - 1];
    pat[j - 1] = PositionConstraint::Differ;
    pat[k + i - 1] = PositionConstraint::Differ;
    for l in 1..j {
        pat[l - 1] = PositionConstraint::Equal;
    }
    for l in i + 1..k + i {
        pat[l - 1] = PositionConstraint::Equal;
    }
    pat
}

/// Checks all family laws for `(n, k)` with the canonical family patterns.
pub fn verify_family_laws(n: u32, k: usize) -> Result<FamilyLawReport> {
    verify_family_laws_with_budget(n, k, DEFAULT_VERTEX_BUDGET)
}

pub fn verify_family_laws_with_budget(n: u32, k: usize, budget: u64) -> Result<FamilyLawReport> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidArgument(format!(
            "family laws need n >= 2 and k >= 1, got n={n}, k={k}"
        )));
    }
    let effective = budget.min(u32::MAX as u64);
    match universe_size(n, k) {
        Some(v) if v <= effective => {}
        Some(v) => {
            return Err(Error::BudgetExceeded {
                needed: v.to_string(),
                budget: effective,
            })
        }
        None => {
            return Err(Error::BudgetExceeded {
                needed: format!("{n}^{}", 2 * k - 1),
                budget: effective,
            })
        }
    }
    let families: Vec<(EdgeFamilyId, ConstraintPattern)> = EdgeFamilyId::all(k)
        .into_iter()
        .map(|f| Ok((f, f.pattern(k)?)))
        .collect::<Result<_>>()?;
    check_family_laws_with_patterns(n, k, &families)
}

/// Law checker over an explicit family/pattern table. Exposed so alternative
/// (or deliberately corrupted) predicate tables can be driven through the
/// exact same brute-force checks.
pub fn check_family_laws_with_patterns(
    n: u32,
    k: usize,
    families: &[(EdgeFamilyId, ConstraintPattern)],
) -> Result<FamilyLawReport> {
    let max = universe_size(n, k).ok_or_else(|| Error::BudgetExceeded {
        needed: format!("{n}^{}", 2 * k - 1),
        budget: u32::MAX as u64,
    })?;
    let tuples: Vec<Vec<u32>> = (1..=max)
        .map(|i| Ok(coords_of(i, n, k)?.coords().to_vec()))
        .collect::<Result<_>>()?;

    let e_pairs: Vec<(usize, usize)> = (1..k).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    let closed_forms: Vec<ConstraintPattern> = e_pairs
        .iter()
        .map(|&(i, j)| intersection_pattern(i, j, k))
        .collect();

    let mut report = FamilyLawReport {
        pairs_checked: 0,
        violations: Vec::new(),
    };

    for a in 0..tuples.len() {
        for b in a + 1..tuples.len() {
            report.pairs_checked += 1;
            let edge = (a as u64 + 1, b as u64 + 1);
            let (u, v) = (&tuples[a], &tuples[b]);
            let members: Vec<EdgeFamilyId> = families
                .iter()
                .filter(|(_, pat)| pattern_matches_raw(pat, u, v))
                .map(|(f, _)| *f)
                .collect();

            if members.is_empty() {
                report.violations.push(FamilyLawViolation::Uncovered { edge });
            }
            let legal_overlap = match members.as_slice() {
                [_] => true,
                [EdgeFamilyId::C { i }, EdgeFamilyId::E { i: ei, .. }] => i == ei,
                _ => members.is_empty(),
            };
            if !legal_overlap {
                report.violations.push(FamilyLawViolation::IllegalOverlap {
                    edge,
                    families: members.clone(),
                });
            }

            for (&(i, j), closed) in e_pairs.iter().zip(&closed_forms) {
                let in_families = members.contains(&EdgeFamilyId::C { i })
                    && members.contains(&EdgeFamilyId::E { i, j });
                let in_closed_form = pattern_matches_raw(closed, u, v);
                if in_families != in_closed_form {
                    report.violations.push(FamilyLawViolation::IntersectionMismatch {
                        edge,
                        i,
                        j,
                        in_families,
                        in_closed_form,
                    });
                }
            }

            // Pairs agreeing on the first k-1 coordinates must fall in some C.
            if (0..k - 1).all(|idx| u[idx] == v[idx])
                && !members.iter().any(|f| matches!(f, EdgeFamilyId::C { .. }))
            {
                report.violations.push(FamilyLawViolation::MissingFromC { edge });
            }

            // For each j, the D_j column plus its E column is exactly the set
            // of pairs differing at j and agreeing strictly before it.
            for j in 1..k {
                let in_union = members.contains(&EdgeFamilyId::D { j })
                    || members
                        .iter()
                        .any(|f| matches!(f, EdgeFamilyId::E { j: ej, .. } if *ej == j));
                let in_closed_form =
                    u[j - 1] != v[j - 1] && (0..j - 1).all(|idx| u[idx] == v[idx]);
                if in_union != in_closed_form {
                    report.violations.push(FamilyLawViolation::DColumnMismatch {
                        edge,
                        j,
                        in_union,
                        in_closed_form,
                    });
                }
            }
        }
    }
    Ok(report)
}
