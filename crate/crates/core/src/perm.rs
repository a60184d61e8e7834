//! Permutations of `{1..n}` and their action on integer vectors.
//!
//! Points are 1-based in all textual I/O (cycle notation) and 0-based
//! internally.

use std::fmt;

use crate::error::{Error, Result};

/// An integer vector: entries are non-negative, the degree is the sum.
pub type IntVec = Vec<u32>;

/// Sum of the entries of an integer vector.
pub fn vec_degree(v: &[u32]) -> u32 {
    v.iter().sum()
}

/// A permutation of `{1..n}`, stored as the image table `images[i] = σ(i)`
/// with 0-based points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::PointOutOfRange {
                    point: img + 1,
                    degree: n,
                });
            }
            if seen[img] {
                return Err(Error::RepeatedPoint { point: img + 1 });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint cycle notation over 1-based points, e.g. `(1,2,3)(4,5)`.
    /// `()` denotes the identity. Points absent from the text are fixed.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let s = text.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation string".into()));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut chars = s.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(Error::Parse(format!("expected '(', found {c:?}")));
            }
            chars.next();
            let mut cycle: Vec<usize> = Vec::new();
            let mut num = String::new();
            loop {
                match chars.next() {
                    Some(d) if d.is_ascii_digit() => num.push(d),
                    Some(',') | Some(' ') => {
                        if !num.is_empty() {
                            cycle.push(take_point(&mut num, &mut used, n)?);
                        }
                    }
                    Some(')') => {
                        if !num.is_empty() {
                            cycle.push(take_point(&mut num, &mut used, n)?);
                        }
                        break;
                    }
                    Some(other) => {
                        return Err(Error::Parse(format!(
                            "unexpected character {other:?} inside cycle"
                        )))
                    }
                    None => return Err(Error::Parse("unterminated cycle".into())),
                }
            }
            for k in 0..cycle.len() {
                images[cycle[k]] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&p| self.images[p]).collect();
        Permutation { images }
    }

    /// Action on positions: `(σ·v)_i = v_{σ⁻¹(i)}`, i.e. the entry at
    /// position `i` moves to position `σ(i)`.
    pub fn act(&self, v: &[u32]) -> IntVec {
        assert_eq!(
            self.degree(),
            v.len(),
            "vector length must equal the permutation degree"
        );
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.images[i]] = x;
        }
        out
    }

    /// Non-trivial cycles in 0-based points, each cycle starting at its
    /// smallest point, cycles sorted by first point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiplicity of each cycle length, fixed points included.
    pub fn cycle_type(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut counts = std::collections::BTreeMap::new();
        let mut fixed = self.degree();
        for cycle in self.cycles() {
            fixed -= cycle.len();
            *counts.entry(cycle.len()).or_insert(0) += 1;
        }
        if fixed > 0 {
            *counts.entry(1).or_insert(0) += fixed;
        }
        counts
    }
}

fn take_point(num: &mut String, used: &mut [bool], n: usize) -> Result<usize> {
    let point: usize = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid point {num:?}")))?;
    num.clear();
    if point == 0 || point > n {
        return Err(Error::PointOutOfRange { point, degree: n });
    }
    if used[point - 1] {
        return Err(Error::RepeatedPoint { point });
    }
    used[point - 1] = true;
    Ok(point - 1)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_identity() {
        let p = Permutation::parse("()", 3).unwrap();
        assert_eq!(p, Permutation::identity(3));
    }

    #[test]
    fn parse_three_cycle() {
        // G = ⟨(1,2,3)⟩: 1→2, 2→3, 3→1.
        let p = Permutation::parse("(1,2,3)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
    }

    #[test]
    fn parse_disjoint_cycles() {
        let p = Permutation::parse("(1,2)(3,4)", 5).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2, 4]);
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(matches!(
            Permutation::parse("(1,4)", 3),
            Err(Error::PointOutOfRange { point: 4, .. })
        ));
    }

    #[test]
    fn parse_rejects_repeated_point() {
        assert!(matches!(
            Permutation::parse("(1,2)(2,3)", 3),
            Err(Error::RepeatedPoint { point: 2 })
        ));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse("(1,2", 3).is_err());
        assert!(Permutation::parse("1,2,3", 3).is_err());
        assert!(Permutation::parse("(1,x)", 3).is_err());
    }

    #[test]
    fn act_identity() {
        let p = Permutation::identity(3);
        assert_eq!(p.act(&[2, 1, 0]), vec![2, 1, 0]);
    }

    #[test]
    fn act_three_cycle() {
        let p = Permutation::parse("(1,2,3)", 3).unwrap();
        assert_eq!(p.act(&[2, 1, 0]), vec![0, 2, 1]);
    }

    #[test]
    fn act_composition() {
        // Applying (1,2,3) twice equals applying (1,3,2) once.
        let p = Permutation::parse("(1,2,3)", 3).unwrap();
        let q = Permutation::parse("(1,3,2)", 3).unwrap();
        let v = vec![2, 1, 0];
        assert_eq!(p.act(&p.act(&v)), q.act(&v));
        assert_eq!(p.compose(&p), q);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Permutation::parse("(1,2,3,4,5)(6,7)", 8).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn display_roundtrip() {
        let p = Permutation::parse("(1,2,3)(4,5)", 6).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn cycle_type_counts_fixed_points() {
        let p = Permutation::parse("(1,2,3)(4,5)", 7).unwrap();
        let ct = p.cycle_type();
        assert_eq!(ct.get(&3), Some(&1));
        assert_eq!(ct.get(&2), Some(&1));
        assert_eq!(ct.get(&1), Some(&2));
    }
}
