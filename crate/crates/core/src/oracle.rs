//! Independent correctness oracles: brute-force orbit enumeration and
//! Burnside/cycle-index counting. Everything here works from generator
//! closures and exact rational arithmetic, on purpose disjoint from the
//! stabilizer-chain machinery it cross-checks.

use std::collections::{BTreeMap, HashSet};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::enum_tree::{GenerationConfig, Mode};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::{IntVec, Permutation};

/// Default cap on the number of box cells brute force will enumerate.
pub const DEFAULT_BOX_BOUND: u64 = 20_000_000;

/// One monomial of a cycle index: `coefficient · Π a_k^{m_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndexTerm {
    pub coefficient: BigRational,
    /// cycle length → multiplicity, fixed points included as length 1
    pub exponents: BTreeMap<usize, usize>,
}

/// All group elements by brute-force closure of the generators.
pub fn brute_force_elements(
    group: &PermutationGroup,
    order_bound: u64,
) -> Result<Vec<Permutation>> {
    let n = group.degree();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = vec![Permutation::identity(n)];
    seen.insert(Permutation::identity(n));
    let mut head = 0;
    while head < out.len() {
        if out.len() as u64 > order_bound {
            return Err(Error::BoundExceeded(format!(
                "group closure exceeds {order_bound} elements"
            )));
        }
        let p = out[head].clone();
        head += 1;
        for g in group.generators() {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                out.push(q);
            }
        }
    }
    Ok(out)
}

/// The cycle index `(1/|G|) Σ_g Π a_k^{c_k(g)}`, grouped by cycle type.
pub fn cycle_index(group: &PermutationGroup, order_bound: u64) -> Result<Vec<CycleIndexTerm>> {
    let elements = brute_force_elements(group, order_bound)?;
    let order = BigInt::from(elements.len());
    let mut by_type: BTreeMap<BTreeMap<usize, usize>, u64> = BTreeMap::new();
    for g in &elements {
        *by_type.entry(g.cycle_type()).or_insert(0) += 1;
    }
    Ok(by_type
        .into_iter()
        .map(|(exponents, count)| CycleIndexTerm {
            coefficient: BigRational::new(BigInt::from(count), order.clone()),
            exponents,
        })
        .collect())
}

/// Number of orbits of vectors with entries in `{0..max_part}`; with a
/// degree, only the orbits of that exact degree, by substituting the
/// truncated geometric series `1 + x^k + … + x^{p·k}` into the cycle
/// index and extracting the coefficient of `x^degree`.
pub fn burnside_count(
    group: &PermutationGroup,
    max_part: u32,
    degree: Option<u32>,
    order_bound: u64,
) -> Result<u64> {
    let elements = brute_force_elements(group, order_bound)?;
    let order = BigInt::from(elements.len());
    let total: BigInt = match degree {
        None => elements
            .iter()
            .map(|g| {
                let cycles: usize = g.cycle_type().values().sum();
                BigInt::from(max_part as u64 + 1).pow(cycles as u32)
            })
            .sum(),
        Some(d) => {
            let d = d as usize;
            elements
                .iter()
                .map(|g| {
                    // Π over cycles of (1 + x^k + ... + x^{pk}), truncated at x^d
                    let mut poly: Vec<BigInt> = vec![BigInt::zero(); d + 1];
                    poly[0] = BigInt::one();
                    for (k, mult) in g.cycle_type() {
                        for _ in 0..mult {
                            poly = multiply_truncated_geometric(&poly, k, max_part as usize, d);
                        }
                    }
                    poly[d].clone()
                })
                .sum()
        }
    };
    let (quotient, remainder) = num::Integer::div_rem(&total, &order);
    assert!(remainder.is_zero(), "Burnside sum must divide evenly");
    u64::try_from(&quotient)
        .map_err(|_| Error::BoundExceeded("orbit count exceeds u64".into()))
}

fn multiply_truncated_geometric(
    poly: &[BigInt],
    k: usize,
    max_part: usize,
    d: usize,
) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); d + 1];
    for (i, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for part in 0..=max_part {
            let shift = i + part * k;
            if shift > d {
                break;
            }
            out[shift] += c;
        }
    }
    out
}

/// All canonical representatives (orbit lexicographic maxima) for the
/// configuration, by exhaustive enumeration of the constraint box.
pub fn brute_force_canonicals(
    cfg: &GenerationConfig<'_>,
    box_bound: u64,
) -> Result<Vec<IntVec>> {
    cfg.validate()?;
    let n = cfg.group.degree();
    let max_degree = cfg.max_degree();
    let bounds: Vec<u32> = (0..n)
        .map(|i| {
            let mut b = max_degree;
            if let Some(p) = cfg.max_part {
                b = b.min(p);
            }
            if let Some(c) = &cfg.ceiling {
                b = b.min(c[i]);
            }
            b
        })
        .collect();
    let cells: u64 = bounds
        .iter()
        .try_fold(1u64, |acc, &b| acc.checked_mul(b as u64 + 1))
        .ok_or_else(|| Error::BoundExceeded("constraint box overflows".into()))?;
    if cells > box_bound {
        return Err(Error::BoundExceeded(format!(
            "constraint box has {cells} cells, above the bound {box_bound}"
        )));
    }

    let mut out = Vec::new();
    let mut v: IntVec = vec![0; n];
    loop {
        let degree: u32 = v.iter().sum();
        let in_mode = match cfg.mode {
            Mode::ByDegree(d) => degree == d,
            Mode::UpToDegree(d) => degree <= d,
            Mode::All => degree <= max_degree,
        };
        if in_mode && is_orbit_maximum(cfg.group, &v)? {
            out.push(v.clone());
        }
        // odometer over the box
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return Ok(out);
            }
            i -= 1;
            if v[i] < bounds[i] {
                v[i] += 1;
                break;
            }
            v[i] = 0;
        }
    }
}

fn is_orbit_maximum(group: &PermutationGroup, v: &[u32]) -> Result<bool> {
    let orbit = group.orbit_of_vector(v)?;
    Ok(orbit.iter().all(|u| u.as_slice() <= v))
}

/// Exact number of orbits meeting the configuration.
pub fn brute_force_orbit_count(cfg: &GenerationConfig<'_>, box_bound: u64) -> Result<u64> {
    Ok(brute_force_canonicals(cfg, box_bound)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enum_tree::count_canonicals;
    use crate::group::DEFAULT_ORDER_BOUND;

    fn rational(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn cycle_index_of_s3() {
        // (a₁³ + 3a₁a₂ + 2a₃)/6
        let terms = cycle_index(&catalog::symmetric(3), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(terms.len(), 3);
        let lookup = |exps: &[(usize, usize)]| {
            let key: BTreeMap<usize, usize> = exps.iter().copied().collect();
            terms
                .iter()
                .find(|t| t.exponents == key)
                .map(|t| t.coefficient.clone())
        };
        assert_eq!(lookup(&[(1, 3)]), Some(rational(1, 6)));
        assert_eq!(lookup(&[(1, 1), (2, 1)]), Some(rational(3, 6)));
        assert_eq!(lookup(&[(3, 1)]), Some(rational(2, 6)));
    }

    #[test]
    fn cycle_index_of_cyclic3_and_trivial() {
        let terms = cycle_index(&catalog::cyclic(3), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(terms.len(), 2);
        let trivial = cycle_index(&catalog::trivial(4), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].exponents, BTreeMap::from([(1, 4)]));
        assert_eq!(trivial[0].coefficient, rational(1, 1));
    }

    #[test]
    fn cycle_index_coefficients_sum_to_one() {
        for (name, g) in catalog::bundled_groups(6).unwrap() {
            let terms = cycle_index(&g, DEFAULT_ORDER_BOUND).unwrap();
            let total: BigRational = terms.iter().map(|t| t.coefficient.clone()).sum();
            assert!(total.is_one(), "coefficients of {name} sum to {total}");
            for t in &terms {
                let weight: usize = t.exponents.iter().map(|(k, m)| k * m).sum();
                assert_eq!(weight, g.degree());
            }
        }
    }

    #[test]
    fn burnside_examples() {
        let c3 = catalog::cyclic(3);
        assert_eq!(burnside_count(&c3, 1, None, DEFAULT_ORDER_BOUND).unwrap(), 4);
        assert_eq!(burnside_count(&c3, 0, None, DEFAULT_ORDER_BOUND).unwrap(), 1);
        let pairs5 = catalog::named("pairs5").unwrap();
        assert_eq!(
            burnside_count(&pairs5, 1, None, DEFAULT_ORDER_BOUND).unwrap(),
            34
        );
    }

    #[test]
    fn burnside_by_degree_sums_to_total() {
        let g = catalog::dihedral(4);
        let p = 2u32;
        let total = burnside_count(&g, p, None, DEFAULT_ORDER_BOUND).unwrap();
        let by_degree: u64 = (0..=p * 4)
            .map(|d| burnside_count(&g, p, Some(d), DEFAULT_ORDER_BOUND).unwrap())
            .sum();
        assert_eq!(total, by_degree);
    }

    #[test]
    fn brute_force_staircase_examples() {
        let c5 = catalog::cyclic(5);
        let cfg = GenerationConfig::new(&c5, Mode::All).under_staircase();
        assert_eq!(brute_force_orbit_count(&cfg, DEFAULT_BOX_BOUND).unwrap(), 71);

        let t = catalog::trivial(3);
        let cfg = GenerationConfig::new(&t, Mode::All).with_max_part(2);
        assert_eq!(brute_force_orbit_count(&cfg, DEFAULT_BOX_BOUND).unwrap(), 27);
    }

    #[test]
    fn brute_force_figure_one_depth_three() {
        let c3 = catalog::cyclic(3);
        let cfg = GenerationConfig::new(&c3, Mode::ByDegree(3));
        let got = brute_force_canonicals(&cfg, DEFAULT_BOX_BOUND).unwrap();
        let expected: Vec<IntVec> = vec![
            vec![1, 1, 1],
            vec![2, 0, 1],
            vec![2, 1, 0],
            vec![3, 0, 0],
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn three_routes_agree_on_small_groups() {
        for (name, g) in catalog::bundled_groups(5).unwrap() {
            for p in 0..=2u32 {
                for d in 0..=4u32 {
                    let cfg =
                        GenerationConfig::new(&g, Mode::ByDegree(d)).with_max_part(p);
                    let engine = count_canonicals(cfg.clone()).unwrap();
                    let brute = brute_force_orbit_count(&cfg, DEFAULT_BOX_BOUND).unwrap();
                    let burnside =
                        burnside_count(&g, p, Some(d), DEFAULT_ORDER_BOUND).unwrap();
                    assert_eq!(engine, brute, "{name} p={p} d={d}");
                    assert_eq!(engine, burnside, "{name} p={p} d={d}");
                }
            }
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let t = catalog::trivial(9);
        let cfg = GenerationConfig::new(&t, Mode::All).with_max_part(9);
        assert!(matches!(
            brute_force_canonicals(&cfg, 1000),
            Err(Error::BoundExceeded(_))
        ));
        assert!(brute_force_elements(&catalog::symmetric(6), 100).is_err());
    }
}
