//! Permutation groups given by generators, Schreier–Sims stabilizer chains
//! with the base fixed to `1, 2, …, n`, membership by sifting, element
//! streams, vector orbits, set stabilizers and intersections.

use std::collections::HashSet;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::{IntVec, Permutation};

/// Default degree bound for brute-force searches over the full symmetric
/// group (`n!` elements).
pub const DEFAULT_DESK_BOUND: usize = 9;

/// Default order bound for element streams (intersection, Reynolds, cycle
/// index).
pub const DEFAULT_ORDER_BOUND: u64 = 1_000_000;

/// One level of a stabilizer chain. Level `i` (0-based) describes the coset
/// space `G_{i-1}/G_i` relative to the base point `i`.
struct ChainLevel {
    /// Orbit of the base point in BFS discovery order; `orbit[0]` is the
    /// base point itself.
    orbit: Vec<usize>,
    /// `rep_to[p]` maps the base point to `p` (left coset representative).
    rep_to: Vec<Option<Permutation>>,
    /// One representative per right coset of `G_{i+1}` in `G_i`: the
    /// lexicographically largest element of each coset, ordered by
    /// increasing preimage of the base point (so the stabilizer coset comes
    /// first). This is the transversal the canonical test iterates: with
    /// right cosets every group element factors as `t_n ∘ … ∘ t_1`,
    /// matching the level-by-level expansion order.
    transversal: Vec<Permutation>,
}

/// A strong generating set: transversals `T_1..T_n` for the chain
/// `G = G_0 ⊇ G_1 ⊇ … ⊇ G_n = {e}` where `G_i` fixes points `1..i`
/// pointwise.
pub struct StrongGeneratingSet {
    degree: usize,
    levels: Vec<ChainLevel>,
    order: u64,
}

impl StrongGeneratingSet {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Size of the transversal at level `i` (0-based).
    pub fn transversal_len(&self, i: usize) -> usize {
        self.levels[i].orbit.len()
    }

    /// The transversal `T_{i+1}` at level `i` (0-based): the lex-largest
    /// element of each right coset, stabilizer coset first.
    pub fn transversal(&self, i: usize) -> &[Permutation] {
        &self.levels[i].transversal
    }

    /// Left coset representatives mapping base point `i` onto its orbit.
    pub fn representative_to(&self, i: usize, point: usize) -> Option<&Permutation> {
        self.levels[i].rep_to[point].as_ref()
    }

    /// Reduces `p` through the chain. The residue is the identity iff
    /// `p` is a member.
    pub fn sift(&self, p: &Permutation) -> Permutation {
        let mut residue = p.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let target = residue.apply(i);
            match &level.rep_to[target] {
                Some(rep) => residue = rep.inverse().compose(&residue),
                None => return residue,
            }
        }
        residue
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.sift(p).is_identity()
    }

    /// Streams every group element exactly once, as products of one left
    /// representative per level.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            chain: self,
            counters: vec![0; self.degree],
            done: false,
        }
    }
}

/// Iterator over all elements of a group, via its stabilizer chain.
pub struct Elements<'a> {
    chain: &'a StrongGeneratingSet,
    counters: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut product = Permutation::identity(self.chain.degree);
        for (i, level) in self.chain.levels.iter().enumerate() {
            let point = level.orbit[self.counters[i]];
            product = product.compose(level.rep_to[point].as_ref().unwrap());
        }
        // odometer increment
        let mut i = self.chain.degree;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counters[i] += 1;
            if self.counters[i] < self.chain.levels[i].orbit.len() {
                break;
            }
            self.counters[i] = 0;
        }
        Some(product)
    }
}

/// Deterministic Schreier–Sims: BFS-minimal transversals over the generator
/// list in input order, base fixed to `1..n` increasing.
pub fn schreier_sims(generators: &[Permutation], n: usize) -> Result<StrongGeneratingSet> {
    for g in generators {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: g.degree(),
            });
        }
    }
    let mut level_gens: Vec<Vec<Permutation>> = vec![Vec::new(); n];
    level_gens[0] = generators
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();

    loop {
        // G_i is generated by every strong generator fixing points 1..i,
        // i.e. the ones recorded at level i or deeper
        let cumulative_gens: Vec<Vec<Permutation>> = (0..n)
            .map(|i| level_gens[i..].iter().flatten().cloned().collect())
            .collect();
        let levels: Vec<ChainLevel> = (0..n)
            .map(|i| build_level(i, &cumulative_gens[i], n))
            .collect();
        match find_violation(&levels, &cumulative_gens, n) {
            None => {
                let mut levels = levels;
                choose_coset_representatives(&mut levels, n);
                let order = levels.iter().map(|l| l.orbit.len() as u64).product();
                return Ok(StrongGeneratingSet {
                    degree: n,
                    levels,
                    order,
                });
            }
            Some((stall_level, residue)) => {
                level_gens[stall_level].push(residue);
            }
        }
    }
}

fn build_level(base: usize, gens: &[Permutation], n: usize) -> ChainLevel {
    let mut rep_to: Vec<Option<Permutation>> = vec![None; n];
    let mut orbit = vec![base];
    rep_to[base] = Some(Permutation::identity(n));
    let mut head = 0;
    while head < orbit.len() {
        let point = orbit[head];
        head += 1;
        let rep = rep_to[point].clone().unwrap();
        for g in gens {
            let image = g.apply(point);
            if rep_to[image].is_none() {
                rep_to[image] = Some(g.compose(&rep));
                orbit.push(image);
            }
        }
    }
    ChainLevel {
        orbit,
        rep_to,
        // filled in by choose_coset_representatives once the chain is final
        transversal: Vec::new(),
    }
}

/// Fills in each level's transversal with the lexicographically largest
/// element of every right coset of `G_{i+1}` in `G_i`, ordered by
/// increasing preimage of the base point. Enumerates `G_i` as products of
/// one left representative per level `≥ i`; right cosets are indexed by
/// the point the element sends to `i`.
fn choose_coset_representatives(levels: &mut [ChainLevel], n: usize) {
    for i in 0..n {
        let mut best: Vec<Option<Permutation>> = vec![None; n];
        let mut counters = vec![0usize; n - i];
        'elements: loop {
            let mut g = Permutation::identity(n);
            for (k, j) in (i..n).enumerate() {
                let point = levels[j].orbit[counters[k]];
                g = g.compose(levels[j].rep_to[point].as_ref().unwrap());
            }
            let q = g.inverse().apply(i);
            match &best[q] {
                Some(b) if *b >= g => {}
                _ => best[q] = Some(g),
            }
            // odometer increment
            let mut k = n - i;
            loop {
                if k == 0 {
                    break 'elements;
                }
                k -= 1;
                counters[k] += 1;
                if counters[k] < levels[i + k].orbit.len() {
                    break;
                }
                counters[k] = 0;
            }
        }
        levels[i].transversal = (i..n).filter_map(|q| best[q].take()).collect();
    }
}

/// Finds the first Schreier generator that does not sift to the identity,
/// returning the level where sifting stalls together with the residue.
fn find_violation(
    levels: &[ChainLevel],
    gens_of_level: &[Vec<Permutation>],
    n: usize,
) -> Option<(usize, Permutation)> {
    for i in 0..n {
        let level = &levels[i];
        for &point in &level.orbit {
            let rep = level.rep_to[point].as_ref().unwrap();
            for g in &gens_of_level[i] {
                let image = g.apply(point);
                let schreier = levels[i].rep_to[image]
                    .as_ref()
                    .unwrap()
                    .inverse()
                    .compose(&g.compose(rep));
                if schreier.is_identity() {
                    continue;
                }
                let mut residue = schreier;
                let mut stalled = None;
                for (j, lower) in levels.iter().enumerate() {
                    let target = residue.apply(j);
                    match &lower.rep_to[target] {
                        Some(r) => residue = r.inverse().compose(&residue),
                        None => {
                            stalled = Some(j);
                            break;
                        }
                    }
                }
                match stalled {
                    Some(j) => return Some((j, residue)),
                    None => {
                        // a full sift must end at the identity
                        debug_assert!(residue.is_identity());
                    }
                }
            }
        }
    }
    None
}

/// A permutation group of degree `n` given by generators, with a lazily
/// computed stabilizer chain. Immutable once built; shareable across
/// threads.
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StrongGeneratingSet>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: OnceLock::new(),
        }
    }
}

impl std::fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermutationGroup(degree {}, ⟨", self.degree)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩)")
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidConfig("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermutationGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StrongGeneratingSet {
        self.chain
            .get_or_init(|| schreier_sims(&self.generators, self.degree).expect("degrees validated"))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    pub fn elements(&self) -> Elements<'_> {
        self.chain().elements()
    }

    /// The full `G`-orbit of `v`, by closure under generator action.
    /// BFS discovery order, `v` first.
    pub fn orbit_of_vector(&self, v: &[u32]) -> Result<Vec<IntVec>> {
        if v.len() != self.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree,
                found: v.len(),
            });
        }
        let mut seen: HashSet<IntVec> = HashSet::new();
        let mut orbit = vec![v.to_vec()];
        seen.insert(v.to_vec());
        let mut head = 0;
        while head < orbit.len() {
            let w = orbit[head].clone();
            head += 1;
            for g in &self.generators {
                let image = g.act(&w);
                if seen.insert(image.clone()) {
                    orbit.push(image);
                }
            }
        }
        Ok(orbit)
    }

    pub fn orbit_size_of_vector(&self, v: &[u32]) -> Result<u64> {
        Ok(self.orbit_of_vector(v)?.len() as u64)
    }
}

/// Builds a group from a list of known members, keeping as generators only
/// the members not already generated.
pub fn group_from_members<I>(degree: usize, members: I) -> Result<PermutationGroup>
where
    I: IntoIterator<Item = Permutation>,
{
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermutationGroup::trivial(degree);
    for m in members {
        if m.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: m.degree(),
            });
        }
        if !current.chain().contains(&m) {
            gens.push(m);
            current = PermutationGroup::new(degree, gens.clone())?;
        }
    }
    Ok(current)
}

/// The set stabilizer in the full symmetric group `S_n` of the `G`-orbit of
/// `v`: all `τ ∈ S_n` mapping the orbit onto itself. Brute force over `n!`
/// permutations; rejects degrees above `desk_bound`.
pub fn set_stabilizer_of_orbit(
    group: &PermutationGroup,
    v: &[u32],
    desk_bound: usize,
) -> Result<PermutationGroup> {
    let n = group.degree();
    if n > desk_bound {
        return Err(Error::BoundExceeded(format!(
            "set stabilizer brute force needs degree ≤ {desk_bound}, got {n}"
        )));
    }
    let orbit = group.orbit_of_vector(v)?;
    // the S_n-orbit of v has n!/Π(mult!) elements; if the G-orbit already
    // has that size the two coincide and the set stabilizer is all of S_n
    let mut mult_count: std::collections::HashMap<u32, u64> = Default::default();
    for &x in v {
        *mult_count.entry(x).or_insert(0) += 1;
    }
    let factorial = |k: u64| (1..=k).product::<u64>();
    let symmetric_orbit =
        factorial(n as u64) / mult_count.values().map(|&m| factorial(m)).product::<u64>();
    if orbit.len() as u64 == symmetric_orbit {
        return Ok(crate::catalog::symmetric(n));
    }
    let orbit_set: HashSet<&[u32]> = orbit.iter().map(|u| u.as_slice()).collect();
    let members = (0..n).permutations(n).filter_map(|images| {
        let tau = Permutation::from_images(images).expect("valid image table");
        let stabilizes = orbit
            .iter()
            .all(|u| orbit_set.contains(tau.act(u).as_slice()));
        stabilizes.then_some(tau)
    });
    group_from_members(n, members)
}

/// The intersection of two groups of equal degree, by streaming elements of
/// the smaller-order group and sifting each through the other's chain.
pub fn intersection(
    h1: &PermutationGroup,
    h2: &PermutationGroup,
    order_bound: u64,
) -> Result<PermutationGroup> {
    if h1.degree() != h2.degree() {
        return Err(Error::DegreeMismatch {
            expected: h1.degree(),
            found: h2.degree(),
        });
    }
    let (small, large) = if h1.order() <= h2.order() {
        (h1, h2)
    } else {
        (h2, h1)
    };
    if small.order() > order_bound {
        return Err(Error::BoundExceeded(format!(
            "intersection streams {} elements, above the bound {order_bound}",
            small.order()
        )));
    }
    let large_chain = large.chain();
    let members = small.elements().filter(|p| large_chain.contains(p));
    group_from_members(small.degree(), members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    /// Brute-force closure of a generator list, independent of the chain.
    pub fn closure(gens: &[Permutation], n: usize) -> Vec<Permutation> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut out = vec![Permutation::identity(n)];
        seen.insert(Permutation::identity(n));
        let mut head = 0;
        while head < out.len() {
            let p = out[head].clone();
            head += 1;
            for g in gens {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    out.push(q);
                }
            }
        }
        out
    }

    #[test]
    fn symmetric_group_order() {
        let gens = vec![perm("(1,2)", 3), perm("(1,2,3)", 3)];
        let chain = schreier_sims(&gens, 3).unwrap();
        assert_eq!(chain.order(), 6);
    }

    #[test]
    fn cyclic_five_transversal_sizes() {
        let gens = vec![perm("(1,2,3,4,5)", 5)];
        let chain = schreier_sims(&gens, 5).unwrap();
        assert_eq!(chain.order(), 5);
        assert_eq!(chain.transversal_len(0), 5);
        for i in 1..5 {
            assert_eq!(chain.transversal_len(i), 1);
        }
    }

    #[test]
    fn frobenius_group_order_twenty() {
        let gens = vec![perm("(1,2,3,4,5)", 5), perm("(2,3,5,4)", 5)];
        let chain = schreier_sims(&gens, 5).unwrap();
        assert_eq!(chain.order(), 20);
        assert_eq!(closure(&gens, 5).len(), 20);
    }

    #[test]
    fn chain_order_matches_bruteforce_closure() {
        for (name, g) in catalog::bundled_groups(6).unwrap() {
            let brute = closure(g.generators(), g.degree()).len() as u64;
            assert_eq!(g.order(), brute, "order mismatch for {name}");
        }
    }

    #[test]
    fn transversal_elements_fix_earlier_points() {
        for (name, g) in catalog::bundled_groups(6).unwrap() {
            let chain = g.chain();
            for i in 0..g.degree() {
                let mut preimages: HashSet<usize> = HashSet::new();
                for t in chain.transversal(i) {
                    for j in 0..i {
                        assert_eq!(t.apply(j), j, "T_{} of {name} moves point {}", i + 1, j + 1);
                    }
                    assert!(g.contains(t).unwrap(), "T_{} of {name} has a non-member", i + 1);
                    preimages.insert(t.inverse().apply(i));
                }
                // one representative per right coset, stabilizer coset first
                assert_eq!(preimages.len(), chain.transversal_len(i));
                assert_eq!(chain.transversal(i)[0].inverse().apply(i), i);
            }
        }
    }

    #[test]
    fn membership_agrees_with_closure() {
        for (name, g) in catalog::bundled_groups(5).unwrap() {
            let n = g.degree();
            let members: HashSet<Permutation> =
                closure(g.generators(), n).into_iter().collect();
            for images in (0..n).permutations(n) {
                let p = Permutation::from_images(images).unwrap();
                assert_eq!(
                    g.contains(&p).unwrap(),
                    members.contains(&p),
                    "membership mismatch in {name} for {p}"
                );
            }
        }
    }

    #[test]
    fn contains_identity_and_rejects_transposition_in_a3() {
        let a3 = catalog::alternating(3);
        assert!(a3.contains(&Permutation::identity(3)).unwrap());
        assert!(!a3.contains(&perm("(1,2)", 3)).unwrap());
    }

    #[test]
    fn elements_stream_is_exact() {
        let s4 = catalog::symmetric(4);
        let elems: Vec<Permutation> = s4.elements().collect();
        assert_eq!(elems.len(), 24);
        let distinct: HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(distinct.len(), 24);
    }

    #[test]
    fn orbit_of_vector_under_cyclic_three() {
        let c3 = catalog::cyclic(3);
        let orbit = c3.orbit_of_vector(&[1, 1, 0]).unwrap();
        let set: HashSet<IntVec> = orbit.into_iter().collect();
        assert_eq!(
            set,
            HashSet::from([vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]])
        );
        assert_eq!(c3.orbit_size_of_vector(&[2, 1, 0]).unwrap(), 3);
        assert_eq!(c3.orbit_of_vector(&[2, 2, 2]).unwrap(), vec![vec![2, 2, 2]]);
    }

    #[test]
    fn orbit_size_divides_group_order() {
        for (_, g) in catalog::bundled_groups(5).unwrap() {
            let v: IntVec = (0..g.degree() as u32).collect();
            let size = g.orbit_size_of_vector(&v).unwrap();
            assert_eq!(g.order() % size, 0);
        }
    }

    #[test]
    fn set_stabilizer_of_a3_orbit() {
        let a3 = catalog::alternating(3);
        let stab = set_stabilizer_of_orbit(&a3, &[2, 1, 0], DEFAULT_DESK_BOUND).unwrap();
        assert_eq!(stab.order(), 3);
        for g in a3.generators() {
            assert!(stab.contains(g).unwrap());
        }
    }

    #[test]
    fn set_stabilizer_of_constant_vector_is_symmetric() {
        let c3 = catalog::cyclic(3);
        let stab = set_stabilizer_of_orbit(&c3, &[0, 0, 0], DEFAULT_DESK_BOUND).unwrap();
        assert_eq!(stab.order(), 6);
    }

    #[test]
    fn set_stabilizer_trivial_group_distinct_entries() {
        let t = PermutationGroup::trivial(2);
        let stab = set_stabilizer_of_orbit(&t, &[1, 0], DEFAULT_DESK_BOUND).unwrap();
        assert_eq!(stab.order(), 1);
    }

    #[test]
    fn set_stabilizer_contains_the_group() {
        for (name, g) in catalog::bundled_groups(4).unwrap() {
            let v: IntVec = (0..g.degree() as u32).rev().collect();
            let stab = set_stabilizer_of_orbit(&g, &v, DEFAULT_DESK_BOUND).unwrap();
            for p in g.elements() {
                assert!(stab.contains(&p).unwrap(), "{name}: {p} missing");
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let s3 = catalog::symmetric(3);
        let a3 = catalog::alternating(3);
        assert_eq!(intersection(&s3, &s3, DEFAULT_ORDER_BOUND).unwrap().order(), 6);
        assert_eq!(intersection(&s3, &a3, DEFAULT_ORDER_BOUND).unwrap().order(), 3);
        let swap = PermutationGroup::new(3, vec![perm("(1,2)", 3)]).unwrap();
        let c3 = catalog::cyclic(3);
        assert_eq!(intersection(&swap, &c3, DEFAULT_ORDER_BOUND).unwrap().order(), 1);
    }

    #[test]
    fn degenerate_inputs() {
        let t = PermutationGroup::trivial(1);
        assert_eq!(t.order(), 1);
        let empty = PermutationGroup::new(4, vec![]).unwrap();
        assert_eq!(empty.order(), 1);
        assert!(intersection(&t, &catalog::cyclic(3), DEFAULT_ORDER_BOUND).is_err());
    }
}
