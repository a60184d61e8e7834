//! Primitive invariants by stabilizer refinement: walk the canonical
//! vectors of `G` in degree-increasing order, intersect the symmetric-group
//! set stabilizers of their orbits, and stop once the cumulative stabilizer
//! has shrunk to `G` itself. A polynomial certifying `G` inside `S_n` is
//! then assembled from the recorded orbit sums.

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::catalog;
use crate::enum_tree::{CanonicalBfs, GenerationConfig, Mode};
use crate::error::{Error, Result};
use crate::group::{intersection, set_stabilizer_of_orbit, PermutationGroup};
use crate::perm::{vec_degree, IntVec};
use crate::poly::{orbit_sum, SparsePolynomial};

/// One refinement step: a canonical vector, the `S_n` set stabilizer of
/// its `G`-orbit, and the cumulative intersection so far.
pub struct ChainStep {
    pub vector: IntVec,
    pub orbit_stabilizer: PermutationGroup,
    pub cumulative: PermutationGroup,
}

/// The chain produced by [`minimal_primitive_invariant`]. The first step
/// is always the root `(0,…,0)` with cumulative `S_n`; subsequent steps
/// strictly decrease the cumulative order down to `|G|`.
pub struct RefinementChain {
    pub steps: Vec<ChainStep>,
    pub target: PermutationGroup,
}

impl RefinementChain {
    pub fn final_order(&self) -> u64 {
        self.steps.last().expect("chain has a root step").cumulative.order()
    }

    pub fn is_complete(&self) -> bool {
        self.final_order() == self.target.order()
    }
}

/// Stabilizer-refinement search. `degree_cap` defaults to `n(n-1)/2`, the
/// degree of a vector with all entries distinct, whose orbit has set
/// stabilizer exactly `G`; `desk_bound` caps the brute-force set
/// stabilizer (default 9).
pub fn minimal_primitive_invariant(
    group: &PermutationGroup,
    degree_cap: Option<u32>,
    desk_bound: usize,
) -> Result<RefinementChain> {
    let n = group.degree();
    let cap = degree_cap.unwrap_or((n * (n.saturating_sub(1)) / 2) as u32);
    let symmetric = catalog::symmetric(n);
    let mut cumulative = symmetric.clone();
    let root_order = cumulative.order();
    let mut steps = vec![ChainStep {
        vector: vec![0; n],
        orbit_stabilizer: symmetric.clone(),
        cumulative: symmetric,
    }];
    if root_order == group.order() {
        return Ok(RefinementChain {
            steps,
            target: group.clone(),
        });
    }

    let cfg = GenerationConfig::new(group, Mode::UpToDegree(cap));
    for v in CanonicalBfs::new(cfg)? {
        if vec_degree(&v) == 0 {
            continue; // root already recorded
        }
        let orbit_stabilizer = set_stabilizer_of_orbit(group, &v, desk_bound)?;
        // if the current stabilizer already lies inside the orbit's, the
        // intersection cannot shrink it — skip the element stream
        if cumulative
            .generators()
            .iter()
            .all(|g| orbit_stabilizer.contains(g).unwrap_or(false))
        {
            continue;
        }
        let refined = intersection(&cumulative, &orbit_stabilizer, u64::MAX)?;
        if refined.order() < cumulative.order() {
            cumulative = refined.clone();
            steps.push(ChainStep {
                vector: v,
                orbit_stabilizer,
                cumulative: refined,
            });
            if cumulative.order() == group.order() {
                return Ok(RefinementChain {
                    steps,
                    target: group.clone(),
                });
            }
        }
    }
    Err(Error::DegreeCapExceeded { cap })
}

/// `Σ_k (k+1) · orbit_sum(G, v_k)` over the non-root steps (`k` counting
/// from 1), or the constant 1 for the root-only chain. The distinct
/// integer coefficients keep the coefficient classes of different steps
/// separate, so any permutation fixing the sum fixes every step's orbit
/// sum individually.
pub fn assemble_primitive_polynomial(chain: &RefinementChain) -> Result<SparsePolynomial> {
    if !chain.is_complete() {
        return Err(Error::IncompleteChain {
            got: chain.final_order(),
            want: chain.target.order(),
        });
    }
    let n = chain.target.degree();
    let mut p = SparsePolynomial::zero(n);
    for (k, step) in chain.steps.iter().skip(1).enumerate() {
        let coeff = BigRational::from(BigInt::from(k as u64 + 2));
        p = p.add(&orbit_sum(&chain.target, &step.vector)?.scale(&coeff));
    }
    if chain.steps.len() == 1 {
        p = SparsePolynomial::one(n);
    }
    Ok(p)
}
