//! Ordered biclique partition of `K_{n^(2k-1)}` built family by family.
//!
//! Each edge family induces a graph that is a blowup of a simple base graph:
//! `C_i` and `D_j` induce the `n^(k-1)`-blowup of `n^(k-1)` disjoint copies
//! of `K_n`, and `E_{i,j}` induces the `n^(2k-i-2)`-blowup of `n^(i-1)`
//! disjoint copies of the complement of the `n x n` grid graph. A star
//! partition of the base graph blows up to a biclique partition of the
//! family, so each family is covered by walking its base vertices in a fixed
//! root order and emitting one star per root.
//!
//! The root orders are what make the union an *ordered* partition. A doubly
//! covered edge lies in exactly one `C_i` and one `E_{i,j}`; roots for `C_i`
//! ascend on the string `(u_{k+i}, ..., u_{i+1})` while roots for `E_{i,j}`
//! descend on `(u_{k+i}, ..., u_{k+j}, u_j, ..., u_1)`, so the endpoint with
//! the smaller `(k+i)`-th coordinate lands in the first side of its
//! `C`-biclique and in the second side of its `E`-biclique.

use crate::coords::universe_size;
use crate::error::{Error, Result};
use crate::family::{EdgeFamilyId, PositionConstraint};
use crate::partition::{Biclique, OrderedPartition};

/// Default cap on the number of vertices of a constructed or brute-force
/// verified graph. Keeps accidental `n^(2k-1)` blowups from exhausting
/// memory; raise it explicitly for bigger experiments.
pub const DEFAULT_VERTEX_BUDGET: u64 = 4096;

/// Direction of a lexicographic root order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Ascending,
    Descending,
}

/// A root order for the star partition of one family's base graph: the
/// coordinate positions of the order string, most significant first, plus a
/// direction. The string must list exactly the family's constrained
/// positions, starting with the root coordinate (`k+i` for `C_i` and
/// `E_{i,j}`, `j` for `D_j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarOrdering {
    pub significance: Vec<usize>,
    pub direction: Direction,
}

impl StarOrdering {
    /// The default order for `family`: ascending for `C` and `D`, descending
    /// for `E`. The `C`/`E` pair of directions is what guarantees opposite
    /// orientations on doubly covered edges; `D` families never overlap
    /// anything, so their order is a free choice kept in the same style.
    pub fn for_family(family: EdgeFamilyId, k: usize) -> Result<Self> {
        family.validate(k)?;
        let (significance, direction) = match family {
            EdgeFamilyId::C { i } => {
                let sig: Vec<usize> = (i + 1..=k + i).rev().collect();
                (sig, Direction::Ascending)
            }
            EdgeFamilyId::D { j } => {
                let mut sig = vec![j];
                sig.extend((k + j..=2 * k - 1).rev());
                sig.extend((1..j).rev());
                (sig, Direction::Ascending)
            }
            EdgeFamilyId::E { i, j } => {
                let mut sig: Vec<usize> = (k + j..=k + i).rev().collect();
                sig.extend((1..=j).rev());
                (sig, Direction::Descending)
            }
        };
        Ok(Self {
            significance,
            direction,
        })
    }

    fn validate_for(&self, family: EdgeFamilyId, k: usize) -> Result<()> {
        let pattern = family.pattern(k)?;
        let mut constrained: Vec<usize> = pattern
            .iter()
            .enumerate()
            .filter(|(_, c)| !matches!(c, PositionConstraint::Free))
            .map(|(idx, _)| idx + 1)
            .collect();
        let mut listed = self.significance.clone();
        listed.sort_unstable();
        constrained.sort_unstable();
        if listed != constrained {
            return Err(Error::InvalidArgument(format!(
                "ordering for {family} must list exactly the constrained positions {constrained:?}"
            )));
        }
        let root_pos = match family {
            EdgeFamilyId::C { i } | EdgeFamilyId::E { i, .. } => k + i,
            EdgeFamilyId::D { j } => j,
        };
        if self.significance.first() != Some(&root_pos) {
            return Err(Error::InvalidArgument(format!(
                "ordering for {family} must have position {root_pos} most significant"
            )));
        }
        Ok(())
    }
}

/// Star partition of an arbitrary graph given as an ordered vertex list and
/// an adjacency predicate: the `i`-th star is rooted at `ordered[i]` with the
/// root's neighbors among later vertices as leaves. Stars with no leaves are
/// omitted, so the result has at most `len - 1` bicliques and covers every
/// edge exactly once.
pub fn star_partition<F>(ordered_vertices: &[u32], adjacent: F) -> Vec<Biclique>
where
    F: Fn(u32, u32) -> bool,
{
    star_partition_indices(ordered_vertices.len(), |a, b| {
        adjacent(ordered_vertices[a], ordered_vertices[b])
    })
    .into_iter()
    .map(|(root, leaves)| {
        Biclique::new(
            vec![ordered_vertices[root]],
            leaves.into_iter().map(|l| ordered_vertices[l]).collect(),
        )
    })
    .collect()
}

/// Index-level star partition: `(root, leaves)` pairs into the vertex order.
fn star_partition_indices<F>(len: usize, adjacent: F) -> Vec<(usize, Vec<usize>)>
where
    F: Fn(usize, usize) -> bool,
{
    (0..len)
        .filter_map(|root| {
            let leaves: Vec<usize> = (root + 1..len).filter(|&v| adjacent(root, v)).collect();
            (!leaves.is_empty()).then_some((root, leaves))
        })
        .collect()
}

/// Biclique partition of one family's edge set, over flat vertex indices of
/// `K_{n^(2k-1)}`, using the family's default root order.
pub fn build_family_bicliques(family: EdgeFamilyId, n: u32, k: usize) -> Result<Vec<Biclique>> {
    let ordering = StarOrdering::for_family(family, k)?;
    build_family_bicliques_with_ordering(family, n, k, &ordering)
}

/// As [`build_family_bicliques`] with a caller-supplied root order. Any
/// valid order yields a biclique partition of the family; only orders with
/// the `(k+i)`-th coordinate most significant (and `C` against `E`
/// directions opposed) make the combined partition ordered.
pub fn build_family_bicliques_with_ordering(
    family: EdgeFamilyId,
    n: u32,
    k: usize,
    ordering: &StarOrdering,
) -> Result<Vec<Biclique>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("base n={n} must be at least 2")));
    }
    family.validate(k)?;
    ordering.validate_for(family, k)?;
    let vertices = checked_universe(n, k, DEFAULT_VERTEX_BUDGET)?;

    let dim = 2 * k - 1;
    let pattern = family.pattern(k)?;
    let free_positions: Vec<usize> = pattern
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c, PositionConstraint::Free))
        .map(|(idx, _)| idx + 1)
        .collect();
    let sig = &ordering.significance;

    // Base vertices are assignments to the constrained positions, listed in
    // root order. Adjacency restates the family pattern on those positions.
    let base: Vec<Vec<u32>> = enumerate_tuples(n, sig.len(), ordering.direction);
    let adjacent = |a: &[u32], b: &[u32]| {
        sig.iter().enumerate().all(|(idx, &pos)| {
            match pattern[pos - 1] {
                PositionConstraint::Equal => a[idx] == b[idx],
                PositionConstraint::Differ => a[idx] != b[idx],
                PositionConstraint::Free => unreachable!("significance lists only constrained positions"),
            }
        })
    };

    let powers: Vec<u64> = (0..dim).map(|t| (n as u64).pow(t as u32)).collect();
    let expand = |descriptor: &[u32]| -> Vec<u32> {
        let mut coords = vec![0u32; dim];
        for (idx, &pos) in sig.iter().enumerate() {
            coords[pos - 1] = descriptor[idx];
        }
        let mut out = Vec::with_capacity(n.pow(free_positions.len() as u32) as usize);
        let mut frees = vec![1u32; free_positions.len()];
        loop {
            for (slot, &pos) in frees.iter().zip(&free_positions) {
                coords[pos - 1] = *slot;
            }
            let index: u64 = coords
                .iter()
                .enumerate()
                .map(|(t, &x)| (x as u64 - 1) * powers[t])
                .sum::<u64>()
                + 1;
            debug_assert!(index <= vertices);
            out.push(index as u32);
            if !odometer_up(&mut frees, n) {
                break;
            }
        }
        out.sort_unstable();
        out
    };

    let stars = star_partition_indices(base.len(), |a, b| adjacent(&base[a], &base[b]));
    let bicliques: Vec<Biclique> = stars
        .into_iter()
        .map(|(root, leaves)| {
            let mut second: Vec<u32> = leaves.iter().flat_map(|&l| expand(&base[l])).collect();
            second.sort_unstable();
            Biclique::new(expand(&base[root]), second)
        })
        .collect();

    let expected = match family {
        EdgeFamilyId::C { .. } | EdgeFamilyId::D { .. } => {
            (n as u64).pow(k as u32 - 1) * (n as u64 - 1)
        }
        EdgeFamilyId::E { i, .. } => (n as u64).pow(i as u32) * (n as u64 - 1),
    };
    assert_eq!(
        bicliques.len() as u64,
        expected,
        "{family} must emit exactly its star count"
    );
    Ok(bicliques)
}

/// The full ordered biclique partition of `K_{n^(2k-1)}`: every `C_i` by `i`,
/// then every `D_j` by `j`, then every `E_{i,j}` by `(i, j)`, each family
/// under its default root order. The result has exactly
/// [`predicted_size`]`(n, k)` bicliques.
pub fn build_partition(n: u32, k: usize) -> Result<OrderedPartition> {
    build_partition_with_budget(n, k, DEFAULT_VERTEX_BUDGET)
}

/// As [`build_partition`] with an explicit vertex budget.
pub fn build_partition_with_budget(n: u32, k: usize, budget: u64) -> Result<OrderedPartition> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("base n={n} must be at least 2")));
    }
    if k < 1 {
        return Err(Error::InvalidArgument("arity k must be at least 1".into()));
    }
    let vertices = checked_universe(n, k, budget)?;
    let mut bicliques = Vec::new();
    for family in EdgeFamilyId::all(k) {
        let ordering = StarOrdering::for_family(family, k)?;
        bicliques.extend(build_family_bicliques_with_ordering(family, n, k, &ordering)?);
    }
    assert_eq!(bicliques.len() as u64, predicted_size(n, k));
    Ok(OrderedPartition::new(vertices as u32, bicliques))
}

/// Size of the constructed partition:
/// `(2k-1) * n^(k-1) * (n-1) + sum_{i=1}^{k-1} i * n^i * (n-1)`.
/// For `k = 1` the sum is empty and this is `n - 1`, the star partition size.
pub fn predicted_size(n: u32, k: usize) -> u64 {
    assert!(n >= 2 && k >= 1, "predicted_size needs n >= 2, k >= 1");
    let n64 = n as u64;
    let stars = (2 * k as u64 - 1)
        .checked_mul(n64.pow(k as u32 - 1))
        .and_then(|v| v.checked_mul(n64 - 1));
    let grid: Option<u64> = (1..k as u64).try_fold(0u64, |acc, i| {
        n64.checked_pow(i as u32)
            .and_then(|p| p.checked_mul(i))
            .and_then(|p| p.checked_mul(n64 - 1))
            .and_then(|p| acc.checked_add(p))
    });
    stars
        .zip(grid)
        .and_then(|(a, b)| a.checked_add(b))
        .expect("partition size overflows u64")
}

/// `ln(predicted_size) / ln(n^(2k-1))`: the size-versus-order exponent of a
/// constructed instance.
pub fn size_exponent(n: u32, k: usize) -> f64 {
    let vertices = universe_size(n, k).expect("universe overflows u64") as f64;
    (predicted_size(n, k) as f64).ln() / vertices.ln()
}

/// `n^(2k-1)` checked against a vertex budget (and the `u32` index space).
fn checked_universe(n: u32, k: usize, budget: u64) -> Result<u64> {
    let effective = budget.min(u32::MAX as u64);
    match universe_size(n, k) {
        Some(v) if v <= effective => Ok(v),
        Some(v) => Err(Error::BudgetExceeded {
            needed: v.to_string(),
            budget: effective,
        }),
        None => Err(Error::BudgetExceeded {
            needed: format!("{n}^{}", 2 * k - 1),
            budget: effective,
        }),
    }
}

/// Advances a 1-based tuple over `[n]^len` in ascending mixed-radix order
/// with the last slot least significant. Returns false after the last tuple.
fn odometer_up(tuple: &mut [u32], n: u32) -> bool {
    for slot in tuple.iter_mut().rev() {
        if *slot < n {
            *slot += 1;
            return true;
        }
        *slot = 1;
    }
    false
}

/// All tuples of `[n]^len`, most significant slot first, in the requested
/// direction.
fn enumerate_tuples(n: u32, len: usize, direction: Direction) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut tuple = vec![1u32; len];
    loop {
        out.push(tuple.clone());
        if !odometer_up(&mut tuple, n) {
            break;
        }
    }
    if matches!(direction, Direction::Descending) {
        out.reverse();
    }
    out
}
