//! The canonical test: decide whether an integer vector is the
//! lexicographic maximum of its orbit, level by level over a strong
//! generating set, with a brute-force oracle alongside.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{PermutationGroup, StrongGeneratingSet};
use crate::perm::IntVec;

/// Outcome of comparing the first `i` coordinates of two vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixOrdering {
    Less,
    EqualPrefix,
    Greater,
}

/// Compares `v` and `w` on their first `i` coordinates (1-based count)
/// lexicographically; `EqualPrefix` realizes coordinatewise equality.
pub fn prefix_compare(v: &[u32], w: &[u32], i: usize) -> Result<PrefixOrdering> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: v.len(),
            found: w.len(),
        });
    }
    if i == 0 || i > v.len() {
        return Err(Error::InvalidConfig(format!(
            "prefix length {i} out of range 1..={}",
            v.len()
        )));
    }
    match v[..i].cmp(&w[..i]) {
        std::cmp::Ordering::Less => Ok(PrefixOrdering::Less),
        std::cmp::Ordering::Equal => Ok(PrefixOrdering::EqualPrefix),
        std::cmp::Ordering::Greater => Ok(PrefixOrdering::Greater),
    }
}

/// True iff `v` is the lexicographic maximum of its orbit.
pub fn is_canonical(v: &[u32], sgs: &StrongGeneratingSet) -> bool {
    run_canonical_test(v, sgs, None)
}

/// As [`is_canonical`], also returning the number of distinct orbit
/// elements the test computed before deciding (the explored part of the
/// orbit, rejecting image included).
pub fn is_canonical_explored(v: &[u32], sgs: &StrongGeneratingSet) -> (bool, u64) {
    let mut explored = HashSet::new();
    let ok = run_canonical_test(v, sgs, Some(&mut explored));
    (ok, explored.len() as u64)
}

/// As [`is_canonical`], inserting every image the test computes into a
/// caller-owned set. Sharing one set across the calls of an enumeration
/// run measures the distinct part of the search space the tests touched.
pub fn is_canonical_tracked(
    v: &[u32],
    sgs: &StrongGeneratingSet,
    explored: &mut HashSet<IntVec>,
) -> bool {
    run_canonical_test(v, sgs, Some(explored))
}

/// Level loop: expand `todo` by the transversal `T_i`, reject the moment an
/// image exceeds `v` on the first `i` coordinates, carry forward only the
/// images agreeing with `v` there. Vectors in `todo` at level `i` agree
/// with `v` on coordinates `1..i-1` and transversal elements fix those
/// positions, so each comparison reduces to the single coordinate `i`.
fn run_canonical_test(
    v: &[u32],
    sgs: &StrongGeneratingSet,
    mut explored: Option<&mut HashSet<IntVec>>,
) -> bool {
    let n = sgs.degree();
    assert_eq!(v.len(), n, "vector length must equal the group degree");
    let mut todo: Vec<IntVec> = vec![v.to_vec()];
    for i in 0..n {
        let transversal = sgs.transversal(i);
        let mut new_todo: Vec<IntVec> = Vec::new();
        let mut seen: HashSet<IntVec> = HashSet::new();
        for w in &todo {
            for t in transversal {
                let image = t.act(w);
                if let Some(explored) = explored.as_deref_mut() {
                    explored.insert(image.clone());
                }
                match image[i].cmp(&v[i]) {
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Less => {}
                    std::cmp::Ordering::Equal => {
                        if seen.insert(image.clone()) {
                            new_todo.push(image);
                        }
                    }
                }
            }
        }
        todo = new_todo;
    }
    true
}

/// The lexicographic maximum of the orbit of `v`, by explicit orbit
/// closure. Testing oracle for [`is_canonical`].
pub fn canonical_representative_bruteforce(
    v: &[u32],
    group: &PermutationGroup,
) -> Result<IntVec> {
    let orbit = group.orbit_of_vector(v)?;
    Ok(orbit.into_iter().max().expect("orbit is never empty"))
}
