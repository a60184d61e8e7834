//! The orderly-generation tree: father/children structure on integer
//! vectors, breadth-first and depth-first lazy enumeration of canonical
//! vectors under constraints, and statistics collection.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::canonical::{is_canonical, is_canonical_tracked};
use crate::error::{Error, Result};
use crate::group::{PermutationGroup, StrongGeneratingSet};
use crate::perm::{vec_degree, IntVec};

/// Decrement the last non-zero entry. Undefined on the all-zero root.
pub fn father(v: &[u32]) -> Result<IntVec> {
    let last = v
        .iter()
        .rposition(|&x| x > 0)
        .ok_or(Error::FatherOfRoot)?;
    let mut out = v.to_vec();
    out[last] -= 1;
    Ok(out)
}

/// With `i` the position of the last non-zero entry (`i = 1` for the root):
/// one child incrementing position `i`, plus one child setting each
/// position `j > i` to 1.
pub fn children(v: &[u32]) -> Vec<IntVec> {
    let n = v.len();
    let last = v.iter().rposition(|&x| x > 0).unwrap_or(0);
    let mut out = Vec::with_capacity(n - last);
    let mut inc = v.to_vec();
    inc[last] += 1;
    out.push(inc);
    for j in last + 1..n {
        let mut unit = v.to_vec();
        unit[j] = 1;
        out.push(unit);
    }
    out
}

/// What gets enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Only vectors of exactly this degree (sum of entries).
    ByDegree(u32),
    /// All vectors of degree at most this.
    UpToDegree(u32),
    /// Everything the remaining constraints allow. Requires a `max_part`
    /// or a ceiling for finiteness.
    All,
}

/// Constraints driving the orderly generation.
#[derive(Clone)]
pub struct GenerationConfig<'g> {
    pub group: &'g PermutationGroup,
    pub mode: Mode,
    /// Upper bound applied to every entry.
    pub max_part: Option<u32>,
    /// Componentwise upper bounds.
    pub ceiling: Option<IntVec>,
}

impl<'g> GenerationConfig<'g> {
    pub fn new(group: &'g PermutationGroup, mode: Mode) -> Self {
        GenerationConfig {
            group,
            mode,
            max_part: None,
            ceiling: None,
        }
    }

    pub fn with_max_part(mut self, p: u32) -> Self {
        self.max_part = Some(p);
        self
    }

    pub fn with_ceiling(mut self, ceiling: IntVec) -> Self {
        self.ceiling = Some(ceiling);
        self
    }

    /// Staircase constraint `v_i ≤ n - i`, excluding the ceiling vector
    /// `(n-1, …, 1, 0)` itself: it is the unique admitted vector of
    /// maximal degree `n(n-1)/2`, so a degree cap one below realizes the
    /// exclusion.
    pub fn under_staircase(mut self) -> Self {
        let n = self.group.degree();
        let ceiling = crate::catalog::staircase(n);
        let cap = ceiling.iter().sum::<u32>().saturating_sub(1);
        if matches!(self.mode, Mode::All) {
            self.mode = Mode::UpToDegree(cap);
        }
        self.with_ceiling(ceiling)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(c) = &self.ceiling {
            if c.len() != self.group.degree() {
                return Err(Error::LengthMismatch {
                    expected: self.group.degree(),
                    found: c.len(),
                });
            }
        }
        if matches!(self.mode, Mode::All) && self.max_part.is_none() && self.ceiling.is_none() {
            return Err(Error::InvalidConfig(
                "unbounded enumeration: need a degree bound, a max_part or a ceiling".into(),
            ));
        }
        Ok(())
    }

    /// Largest degree any admitted vector can have.
    pub fn max_degree(&self) -> u32 {
        let structural = match (&self.ceiling, self.max_part) {
            (Some(c), Some(p)) => c.iter().map(|&x| x.min(p)).sum(),
            (Some(c), None) => c.iter().sum(),
            (None, Some(p)) => p * self.group.degree() as u32,
            (None, None) => u32::MAX,
        };
        match self.mode {
            Mode::ByDegree(d) | Mode::UpToDegree(d) => d.min(structural),
            Mode::All => structural,
        }
    }

    /// Whether `v` satisfies the max_part/ceiling constraints. Degree
    /// bounds are handled by the tree walk itself.
    pub fn admits(&self, v: &[u32]) -> bool {
        if let Some(p) = self.max_part {
            if v.iter().any(|&x| x > p) {
                return false;
            }
        }
        if let Some(c) = &self.ceiling {
            if v.iter().zip(c).any(|(&x, &b)| x > b) {
                return false;
            }
        }
        true
    }

    fn yields(&self, degree: u32) -> bool {
        match self.mode {
            Mode::ByDegree(d) => degree == d,
            Mode::UpToDegree(_) | Mode::All => true,
        }
    }
}

/// Counters of a generation run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumStats {
    /// Number of canonical vectors per degree (index = degree).
    pub canonicals_by_degree: Vec<u64>,
    /// Calls to the canonical test, root included.
    pub tests: u64,
    /// Vectors never tested because an ancestor tested non-canonical
    /// (constraint discards are counted nowhere).
    pub skipped: u64,
    /// Sum of orbit sizes over all tested vectors. Collected only on
    /// stats-enabled runs.
    pub total_orbit_sizes: u64,
    /// Number of distinct vectors the canonical tests of the run computed,
    /// over all calls together (root included): the part of the search
    /// space the run actually touched. Collected only on stats-enabled
    /// runs.
    pub total_explored: u64,
}

impl EnumStats {
    pub fn canonicals_total(&self) -> u64 {
        self.canonicals_by_degree.iter().sum()
    }

    /// `Err := (tests − canonicals) / canonicals`.
    pub fn err(&self) -> f64 {
        let c = self.canonicals_total();
        (self.tests - c) as f64 / c as f64
    }

    /// `Ratio := total explored / total orbits`.
    pub fn ratio(&self) -> f64 {
        self.total_explored as f64 / self.total_orbit_sizes as f64
    }

    /// `Complexity := total explored / canonicals`.
    pub fn complexity(&self) -> f64 {
        self.total_explored as f64 / self.canonicals_total() as f64
    }

    /// The relative error bound `min{ n(|G|−1)/(n+d), n−1 }`.
    pub fn relative_error_bound(n: usize, group_order: u64, max_degree: u32) -> f64 {
        let n = n as f64;
        let bound = n * (group_order - 1) as f64 / (n + max_degree as f64);
        bound.min(n - 1.0)
    }

    pub fn within_relative_error_bound(&self, n: usize, group_order: u64, max_degree: u32) -> bool {
        self.err() <= Self::relative_error_bound(n, group_order, max_degree) + 1e-12
    }
}

/// Breadth-first lazy enumeration of canonical vectors: degrees in
/// increasing order, siblings in the order of the children definition.
/// Only the previous degree level is retained.
pub struct CanonicalBfs<'g> {
    cfg: GenerationConfig<'g>,
    chain: &'g StrongGeneratingSet,
    max_degree: u32,
    frontier: Vec<IntVec>,
    pos: usize,
    degree: u32,
    collect_stats: bool,
    stats: EnumStats,
    /// Union of all vectors the canonical tests computed (stats runs only).
    explored: HashSet<IntVec>,
    done: bool,
}

impl<'g> CanonicalBfs<'g> {
    pub fn new(cfg: GenerationConfig<'g>) -> Result<Self> {
        Self::build(cfg, false)
    }

    /// Enables collection of orbit sizes, explored counts and skipped
    /// subtree sizes; the hot path pays no accounting cost otherwise.
    pub fn with_stats(cfg: GenerationConfig<'g>) -> Result<Self> {
        Self::build(cfg, true)
    }

    fn build(cfg: GenerationConfig<'g>, collect_stats: bool) -> Result<Self> {
        cfg.validate()?;
        let chain = cfg.group.chain();
        let max_degree = cfg.max_degree();
        let root = vec![0; cfg.group.degree()];
        let mut stats = EnumStats::default();
        // the root is counted as one test and is always canonical
        stats.tests = 1;
        stats.canonicals_by_degree.push(1);
        let mut explored = HashSet::new();
        if collect_stats {
            stats.total_orbit_sizes = 1;
            stats.total_explored = 1;
            explored.insert(root.clone());
        }
        Ok(CanonicalBfs {
            cfg,
            chain,
            max_degree,
            frontier: vec![root],
            pos: 0,
            degree: 0,
            collect_stats,
            stats,
            explored,
            done: false,
        })
    }

    pub fn stats(&self) -> &EnumStats {
        &self.stats
    }

    pub fn into_stats(mut self) -> EnumStats {
        for _ in self.by_ref() {}
        self.stats
    }

    fn advance_level(&mut self) {
        if self.degree >= self.max_degree {
            self.done = true;
            return;
        }
        let mut next: Vec<IntVec> = Vec::new();
        for v in &self.frontier {
            for child in children(v) {
                if !self.cfg.admits(&child) {
                    continue;
                }
                self.stats.tests += 1;
                let canonical = if self.collect_stats {
                    let ok = is_canonical_tracked(&child, self.chain, &mut self.explored);
                    self.stats.total_explored = self.explored.len() as u64;
                    self.stats.total_orbit_sizes +=
                        self.cfg.group.orbit_size_of_vector(&child).expect("length ok");
                    ok
                } else {
                    is_canonical(&child, self.chain)
                };
                if canonical {
                    next.push(child);
                } else if self.collect_stats {
                    self.stats.skipped +=
                        pruned_subtree_size(&child, &self.cfg, self.max_degree);
                }
            }
        }
        self.degree += 1;
        self.stats
            .canonicals_by_degree
            .push(next.len() as u64);
        if next.is_empty() {
            self.done = true;
        }
        self.frontier = next;
        self.pos = 0;
    }
}

impl Iterator for CanonicalBfs<'_> {
    type Item = IntVec;

    fn next(&mut self) -> Option<IntVec> {
        loop {
            if self.done && self.pos >= self.frontier.len() {
                return None;
            }
            if self.pos < self.frontier.len() {
                let v = self.frontier[self.pos].clone();
                self.pos += 1;
                if self.cfg.yields(self.degree) {
                    return Some(v);
                }
                continue;
            }
            self.advance_level();
        }
    }
}

/// Number of constraint-admitted descendants of `v` (excluding `v`) with
/// degree at most `max_degree`. Children are componentwise ≥ their father,
/// so pruning below an inadmissible vector loses nothing.
fn pruned_subtree_size(v: &[u32], cfg: &GenerationConfig, max_degree: u32) -> u64 {
    if vec_degree(v) >= max_degree {
        return 0;
    }
    let mut count = 0;
    for child in children(v) {
        if cfg.admits(&child) {
            count += 1 + pruned_subtree_size(&child, cfg, max_degree);
        }
    }
    count
}

/// Depth-first enumeration of canonical vectors, for single-degree
/// iteration with a stack of at most `d + 1` partial nodes.
pub struct CanonicalDfs<'g> {
    cfg: GenerationConfig<'g>,
    chain: &'g StrongGeneratingSet,
    max_degree: u32,
    /// (vector, degree, index of the next child to try)
    stack: Vec<(IntVec, u32, usize)>,
    started: bool,
}

impl<'g> CanonicalDfs<'g> {
    pub fn new(cfg: GenerationConfig<'g>) -> Result<Self> {
        cfg.validate()?;
        let chain = cfg.group.chain();
        let max_degree = cfg.max_degree();
        Ok(CanonicalDfs {
            cfg,
            chain,
            max_degree,
            stack: Vec::new(),
            started: false,
        })
    }

    /// Child `k` of `v`: index 0 increments the last non-zero position,
    /// index `j ≥ 1` sets the `j`-th later position to 1.
    fn child(v: &[u32], k: usize) -> Option<IntVec> {
        let n = v.len();
        let last = v.iter().rposition(|&x| x > 0).unwrap_or(0);
        if k == 0 {
            let mut out = v.to_vec();
            out[last] += 1;
            Some(out)
        } else if last + k < n {
            let mut out = v.to_vec();
            out[last + k] = 1;
            Some(out)
        } else {
            None
        }
    }
}

impl Iterator for CanonicalDfs<'_> {
    type Item = IntVec;

    fn next(&mut self) -> Option<IntVec> {
        if !self.started {
            self.started = true;
            let root = vec![0; self.cfg.group.degree()];
            if self.max_degree > 0 {
                self.stack.push((root.clone(), 0, 0));
            }
            if self.cfg.yields(0) {
                return Some(root);
            }
        }
        while let Some((v, degree, next_child)) = self.stack.last().cloned() {
            match Self::child(&v, next_child) {
                None => {
                    self.stack.pop();
                }
                Some(child) => {
                    self.stack.last_mut().unwrap().2 = next_child + 1;
                    if !self.cfg.admits(&child) {
                        continue;
                    }
                    if !is_canonical(&child, self.chain) {
                        continue;
                    }
                    let child_degree = degree + 1;
                    if child_degree < self.max_degree {
                        self.stack.push((child.clone(), child_degree, 0));
                    }
                    if self.cfg.yields(child_degree) {
                        return Some(child);
                    }
                }
            }
        }
        None
    }
}

/// Streams the canonical representatives for `config` in BFS order.
pub fn enumerate_canonicals<'g>(config: GenerationConfig<'g>) -> Result<CanonicalBfs<'g>> {
    CanonicalBfs::new(config)
}

/// Total number of canonical representatives for `config`.
pub fn count_canonicals(config: GenerationConfig<'_>) -> Result<u64> {
    Ok(CanonicalBfs::new(config)?.count() as u64)
}
