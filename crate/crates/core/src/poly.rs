//! Exact sparse multivariate polynomials over the rationals, the action of
//! permutations on them, orbit sums, the Reynolds operator and brute-force
//! polynomial stabilizers.
//!
//! Rendering is stable: terms in lex-descending exponent order, each term
//! `c*x1^a1*…` with the coefficient always printed (`p/q` when not an
//! integer) and variables of exponent zero omitted.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{group_from_members, PermutationGroup};
use crate::perm::{IntVec, Permutation};

/// A polynomial in `nvars` variables: exponent vector → non-zero rational
/// coefficient. Immutable by convention once built.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: HashMap<IntVec, BigRational>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: HashMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The monomial `c · x^exponents`.
    pub fn monomial(exponents: IntVec, c: BigRational) -> Self {
        let nvars = exponents.len();
        let mut p = Self::zero(nvars);
        p.add_term(exponents, c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        Self::monomial(exps, BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntVec, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exponents: IntVec, c: BigRational) {
        assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (exps, c) in &other.terms {
            out.add_term(exps.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> SparsePolynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: IntVec = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// The action `(σ·P)(x) = P(x_{σ⁻¹(1)}, …)`: permutes each exponent
    /// vector by position, same convention as the vector action.
    pub fn act(&self, sigma: &Permutation) -> SparsePolynomial {
        assert_eq!(sigma.degree(), self.nvars);
        SparsePolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (sigma.act(e), c.clone()))
                .collect(),
        }
    }

    /// Exponent vectors in lex-descending order.
    pub fn sorted_exponents(&self) -> Vec<IntVec> {
        self.terms.keys().cloned().sorted().rev().collect()
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, exps) in self.sorted_exponents().iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", self.terms[exps])?;
            for (i, &a) in exps.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                write!(f, "*x{}", i + 1)?;
                if a > 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePolynomial({self})")
    }
}

/// The orbit sum of the monomial `x^exponents`: one term per orbit
/// element, all coefficients 1.
pub fn orbit_sum(group: &PermutationGroup, exponents: &[u32]) -> Result<SparsePolynomial> {
    let orbit = group.orbit_of_vector(exponents)?;
    let mut p = SparsePolynomial::zero(group.degree());
    for exps in orbit {
        p.add_term(exps, BigRational::one());
    }
    Ok(p)
}

/// The Reynolds operator `R(P) = (1/|G|) Σ_{σ∈G} σ·P`.
pub fn reynolds(
    group: &PermutationGroup,
    p: &SparsePolynomial,
    order_bound: u64,
) -> Result<SparsePolynomial> {
    if p.nvars() != group.degree() {
        return Err(Error::DegreeMismatch {
            expected: group.degree(),
            found: p.nvars(),
        });
    }
    if group.order() > order_bound {
        return Err(Error::BoundExceeded(format!(
            "Reynolds operator streams {} elements, above the bound {order_bound}",
            group.order()
        )));
    }
    let mut sum = SparsePolynomial::zero(p.nvars());
    for sigma in group.elements() {
        sum = sum.add(&p.act(&sigma));
    }
    let scale = BigRational::new(BigInt::one(), BigInt::from(group.order()));
    Ok(sum.scale(&scale))
}

/// True iff every generator fixes `P` (sufficient by group closure).
pub fn is_invariant(group: &PermutationGroup, p: &SparsePolynomial) -> bool {
    group.generators().iter().all(|g| &p.act(g) == p)
}

/// The exact stabilizer `{σ ∈ S_n | σ·P = P}`, by filtering all `n!`
/// permutations. Rejects `n` above `desk_bound`.
pub fn polynomial_stabilizer_bruteforce(
    p: &SparsePolynomial,
    desk_bound: usize,
) -> Result<PermutationGroup> {
    let n = p.nvars();
    if n > desk_bound {
        return Err(Error::BoundExceeded(format!(
            "polynomial stabilizer brute force needs degree ≤ {desk_bound}, got {n}"
        )));
    }
    let members = (0..n).permutations(n).filter_map(|images| {
        let sigma = Permutation::from_images(images).expect("valid image table");
        (&p.act(&sigma) == p).then_some(sigma)
    });
    group_from_members(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::{DEFAULT_DESK_BOUND, DEFAULT_ORDER_BOUND};

    fn half() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(2))
    }

    #[test]
    fn orbit_sum_examples() {
        let c3 = catalog::cyclic(3);
        let p = orbit_sum(&c3, &[2, 1, 0]).unwrap();
        let expected = SparsePolynomial::monomial(vec![2, 1, 0], BigRational::one())
            .add(&SparsePolynomial::monomial(vec![0, 2, 1], BigRational::one()))
            .add(&SparsePolynomial::monomial(vec![1, 0, 2], BigRational::one()));
        assert_eq!(p, expected);
        assert_eq!(
            orbit_sum(&c3, &[0, 0, 0]).unwrap(),
            SparsePolynomial::one(3)
        );
        let s2 = catalog::symmetric(2);
        assert_eq!(
            orbit_sum(&s2, &[1, 0]).unwrap(),
            SparsePolynomial::variable(2, 1).add(&SparsePolynomial::variable(2, 2))
        );
    }

    #[test]
    fn reynolds_examples() {
        let s2 = catalog::symmetric(2);
        let x1 = SparsePolynomial::variable(2, 1);
        let r = reynolds(&s2, &x1, DEFAULT_ORDER_BOUND).unwrap();
        let expected = orbit_sum(&s2, &[1, 0]).unwrap().scale(&half());
        assert_eq!(r, expected);

        let c3 = catalog::cyclic(3);
        let m = SparsePolynomial::monomial(vec![2, 1, 0], BigRational::one());
        let r = reynolds(&c3, &m, DEFAULT_ORDER_BOUND).unwrap();
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        assert_eq!(r, orbit_sum(&c3, &[2, 1, 0]).unwrap().scale(&third));
    }

    #[test]
    fn reynolds_fixes_invariants_and_is_idempotent() {
        for (_, g) in catalog::bundled_groups(4).unwrap() {
            let n = g.degree();
            let p = SparsePolynomial::monomial(
                (0..n as u32).collect(),
                BigRational::from(BigInt::from(3)),
            );
            let r = reynolds(&g, &p, DEFAULT_ORDER_BOUND).unwrap();
            assert!(is_invariant(&g, &r));
            assert_eq!(reynolds(&g, &r, DEFAULT_ORDER_BOUND).unwrap(), r);
        }
    }

    #[test]
    fn is_invariant_examples() {
        let s2 = catalog::symmetric(2);
        assert!(!is_invariant(&s2, &SparsePolynomial::variable(2, 1)));
        let s3 = catalog::symmetric(3);
        let sum = SparsePolynomial::variable(3, 1)
            .add(&SparsePolynomial::variable(3, 2))
            .add(&SparsePolynomial::variable(3, 3));
        assert!(is_invariant(&s3, &sum));
        let c3 = catalog::cyclic(3);
        assert!(is_invariant(&c3, &orbit_sum(&c3, &[2, 1, 0]).unwrap()));
    }

    #[test]
    fn stabilizer_examples() {
        let sum = SparsePolynomial::variable(4, 1)
            .add(&SparsePolynomial::variable(4, 2))
            .add(&SparsePolynomial::variable(4, 3))
            .add(&SparsePolynomial::variable(4, 4));
        assert_eq!(
            polynomial_stabilizer_bruteforce(&sum, DEFAULT_DESK_BOUND)
                .unwrap()
                .order(),
            24
        );

        let a3 = catalog::alternating(3);
        let p = orbit_sum(&a3, &[2, 1, 0]).unwrap();
        let stab = polynomial_stabilizer_bruteforce(&p, DEFAULT_DESK_BOUND).unwrap();
        assert_eq!(stab.order(), 3);
        for g in a3.generators() {
            assert!(stab.contains(g).unwrap());
        }

        let x1 = SparsePolynomial::variable(4, 1);
        assert_eq!(
            polynomial_stabilizer_bruteforce(&x1, DEFAULT_DESK_BOUND)
                .unwrap()
                .order(),
            6
        );
    }

    #[test]
    fn action_is_a_ring_action() {
        let sigma = Permutation::parse("(1,2,3)", 3).unwrap();
        let p = SparsePolynomial::monomial(vec![2, 0, 1], half());
        let q = SparsePolynomial::variable(3, 1).add(&SparsePolynomial::one(3));
        assert_eq!(p.mul(&q).act(&sigma), p.act(&sigma).mul(&q.act(&sigma)));
    }

    #[test]
    fn orbit_stabilizer_balance() {
        // term count of an orbit sum × |Stab_G(exps)| = |G|
        for (name, g) in catalog::bundled_groups(4).unwrap() {
            for exps in [
                (0..g.degree() as u32).rev().collect::<IntVec>(),
                vec![1; g.degree()],
                std::iter::once(2).chain(std::iter::repeat(0)).take(g.degree()).collect(),
            ] {
                let p = orbit_sum(&g, &exps).unwrap();
                let stab = g.elements().filter(|s| s.act(&exps) == exps).count() as u64;
                assert_eq!(
                    p.num_terms() as u64 * stab,
                    g.order(),
                    "balance fails for {name} at {exps:?}"
                );
            }
        }
    }

    #[test]
    fn display_format() {
        let p = SparsePolynomial::monomial(vec![2, 1, 0], BigRational::from(BigInt::from(2)))
            .add(&SparsePolynomial::monomial(vec![0, 0, 1], half()));
        assert_eq!(p.to_string(), "2*x1^2*x2 + 1/2*x3");
        assert_eq!(SparsePolynomial::zero(2).to_string(), "0");
        assert_eq!(SparsePolynomial::one(2).to_string(), "1");
    }
}
