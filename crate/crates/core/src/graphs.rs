//! Graphs on `n` nodes as 0/1 vectors indexed by node pairs, acted on by
//! the symmetric group permuting the nodes. Canonical enumeration then
//! lists graphs up to isomorphism; dropping the 0/1 cap counts
//! multigraphs by number of edges.

use crate::enum_tree::{count_canonicals, enumerate_canonicals, GenerationConfig, Mode};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::{IntVec, Permutation};

/// The node pairs `(i, j)`, `i < j`, in lexicographic order (0-based).
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// The action of `S_n` on the `n(n-1)/2` node pairs, as a permutation
/// group of that degree. Generated by the images of the `S_n` generators.
pub fn pair_action_group(n: usize) -> Result<PermutationGroup> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!(
            "pair action needs at least 2 nodes, got {n}"
        )));
    }
    let pairs = pair_list(n);
    let index = |a: usize, b: usize| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        pairs.binary_search(&(i, j)).expect("pair is listed")
    };
    let node_gens = crate::catalog::symmetric(n);
    let gens = node_gens
        .generators()
        .iter()
        .map(|sigma| {
            let images = pairs
                .iter()
                .map(|&(i, j)| index(sigma.apply(i), sigma.apply(j)))
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::new(pairs.len(), gens)
}

/// Number of simple graphs on `n` unlabeled nodes. Brute force over the
/// pair action; rejects `n` above `node_bound` (pair degree grows
/// quadratically).
pub fn count_unlabeled_graphs(n: usize, node_bound: usize) -> Result<u64> {
    if n > node_bound {
        return Err(Error::BoundExceeded(format!(
            "graph counting needs ≤ {node_bound} nodes, got {n}"
        )));
    }
    let group = pair_action_group(n)?;
    let cfg = GenerationConfig::new(&group, Mode::All).with_max_part(1);
    count_canonicals(cfg)
}

/// All simple graphs on `n` unlabeled nodes, one canonical 0/1 incidence
/// vector per isomorphism class, in search order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<IntVec>> {
    let group = pair_action_group(n)?;
    let cfg = GenerationConfig::new(&group, Mode::All).with_max_part(1);
    Ok(enumerate_canonicals(cfg)?.collect())
}

/// Number of multigraphs on `n` unlabeled nodes with exactly `edges`
/// edges, counted with multiplicity.
pub fn count_multigraphs(n: usize, edges: u32) -> Result<u64> {
    let group = pair_action_group(n)?;
    let cfg = GenerationConfig::new(&group, Mode::ByDegree(edges));
    count_canonicals(cfg)
}

/// Renders an incidence vector as an edge list like `1-2 1-3` (1-based
/// nodes, one entry per unit of multiplicity). The empty graph renders as
/// `-`.
pub fn edge_list(n: usize, v: &[u32]) -> Result<String> {
    let pairs = pair_list(n);
    if v.len() != pairs.len() {
        return Err(Error::LengthMismatch {
            expected: pairs.len(),
            found: v.len(),
        });
    }
    let mut out: Vec<String> = Vec::new();
    for (&(i, j), &mult) in pairs.iter().zip(v) {
        for _ in 0..mult {
            out.push(format!("{}-{}", i + 1, j + 1));
        }
    }
    if out.is_empty() {
        return Ok("-".into());
    }
    Ok(out.join(" "))
}
