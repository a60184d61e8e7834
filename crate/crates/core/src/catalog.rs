//! Bundled group constructors, the named-group registry used by the CLI,
//! and the group file format.
//!
//! Group files are UTF-8 text: a first line `degree n`, then one generator
//! per line in cycle notation. Blank lines and lines starting with `#` are
//! ignored.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graphs;
use crate::group::PermutationGroup;
use crate::perm::Permutation;

pub fn trivial(n: usize) -> PermutationGroup {
    PermutationGroup::trivial(n.max(1))
}

pub fn cyclic(n: usize) -> PermutationGroup {
    assert!(n >= 1);
    if n == 1 {
        return PermutationGroup::trivial(1);
    }
    let cycle: Vec<usize> = (1..n).chain([0]).collect();
    PermutationGroup::new(n, vec![Permutation::from_images(cycle).unwrap()]).unwrap()
}

pub fn symmetric(n: usize) -> PermutationGroup {
    assert!(n >= 1);
    if n == 1 {
        return PermutationGroup::trivial(1);
    }
    let mut gens = vec![Permutation::parse("(1,2)", n).unwrap()];
    if n > 2 {
        let cycle: Vec<usize> = (1..n).chain([0]).collect();
        gens.push(Permutation::from_images(cycle).unwrap());
    }
    PermutationGroup::new(n, gens).unwrap()
}

/// The dihedral group on the vertices of a regular `n`-gon: order `2n` for
/// `n ≥ 3`, degenerating to `S_2` and the trivial group below.
pub fn dihedral(n: usize) -> PermutationGroup {
    assert!(n >= 1);
    if n == 1 {
        return PermutationGroup::trivial(1);
    }
    let rotation: Vec<usize> = (1..n).chain([0]).collect();
    // reflection fixing vertex 1: i ↦ n + 2 - i
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    PermutationGroup::new(
        n,
        vec![
            Permutation::from_images(rotation).unwrap(),
            Permutation::from_images(reflection).unwrap(),
        ],
    )
    .unwrap()
}

/// The alternating group, generated by the consecutive 3-cycles.
pub fn alternating(n: usize) -> PermutationGroup {
    assert!(n >= 1);
    if n <= 2 {
        return PermutationGroup::trivial(n);
    }
    let gens = (0..n - 2)
        .map(|i| {
            let mut images: Vec<usize> = (0..n).collect();
            images[i] = i + 1;
            images[i + 1] = i + 2;
            images[i + 2] = i;
            Permutation::from_images(images).unwrap()
        })
        .collect();
    PermutationGroup::new(n, gens).unwrap()
}

/// The Frobenius group of order 20 in S_5: ⟨(1,2,3,4,5), (2,3,5,4)⟩.
pub fn frobenius_20() -> PermutationGroup {
    PermutationGroup::new(
        5,
        vec![
            Permutation::parse("(1,2,3,4,5)", 5).unwrap(),
            Permutation::parse("(2,3,5,4)", 5).unwrap(),
        ],
    )
    .unwrap()
}

/// The staircase ceiling `(n-1, n-2, …, 1, 0)`, i.e. `v_i ≤ n - i`.
pub fn staircase(n: usize) -> Vec<u32> {
    (0..n).map(|i| (n - 1 - i) as u32).collect()
}

/// Resolves a catalog name: `trivialN`, `cyclicN`, `dihedralN`,
/// `symmetricN`, `alternatingN`, `frobenius20`, `pairsN`.
pub fn named(name: &str) -> Result<PermutationGroup> {
    let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(|| {
        Error::Parse(format!("unknown group name {name:?} (missing degree suffix)"))
    })?;
    let (family, num) = name.split_at(split);
    let n: usize = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid degree suffix in {name:?}")))?;
    if n == 0 {
        return Err(Error::Parse(format!("degree must be positive in {name:?}")));
    }
    match family {
        "trivial" => Ok(trivial(n)),
        "cyclic" => Ok(cyclic(n)),
        "dihedral" => Ok(dihedral(n)),
        "symmetric" => Ok(symmetric(n)),
        "alternating" => Ok(alternating(n)),
        "frobenius" if n == 20 => Ok(frobenius_20()),
        "pairs" => graphs::pair_action_group(n),
        _ => Err(Error::Parse(format!("unknown group name {name:?}"))),
    }
}

/// Parses the group file format.
pub fn parse_group_file(text: &str) -> Result<PermutationGroup> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty group file".into()))?;
    let degree: usize = header
        .strip_prefix("degree")
        .map(str::trim)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected \"degree n\" header, found {header:?}")))?;
    if degree == 0 {
        return Err(Error::Parse("degree must be positive".into()));
    }
    let generators = lines
        .map(|line| Permutation::parse(line, degree))
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::new(degree, generators)
}

pub fn load_group_file(path: &Path) -> Result<PermutationGroup> {
    parse_group_file(&std::fs::read_to_string(path)?)
}

/// The five transitive groups of degree 5, ordered by increasing order:
/// C_5, D_5, F_20, A_5, S_5.
pub fn degree5_benchmark() -> Vec<(String, PermutationGroup)> {
    vec![
        ("cyclic5".into(), cyclic(5)),
        ("dihedral5".into(), dihedral(5)),
        ("frobenius20".into(), frobenius_20()),
        ("alternating5".into(), alternating(5)),
        ("symmetric5".into(), symmetric(5)),
    ]
}

/// Every catalog group of degree at most `max_degree`, deduplicated by
/// (degree, order, generator set) is not attempted: families overlap (e.g.
/// dihedral3 = symmetric3) and tests tolerate that.
pub fn bundled_groups(max_degree: usize) -> Result<Vec<(String, PermutationGroup)>> {
    let mut out: Vec<(String, PermutationGroup)> = Vec::new();
    for n in 1..=max_degree {
        out.push((format!("trivial{n}"), trivial(n)));
        if n >= 2 {
            out.push((format!("cyclic{n}"), cyclic(n)));
            out.push((format!("symmetric{n}"), symmetric(n)));
        }
        if n >= 3 {
            out.push((format!("dihedral{n}"), dihedral(n)));
            out.push((format!("alternating{n}"), alternating(n)));
        }
    }
    if max_degree >= 5 {
        out.push(("frobenius20".into(), frobenius_20()));
    }
    for n in 2.. {
        if n * (n - 1) / 2 > max_degree {
            break;
        }
        out.push((format!("pairs{n}"), graphs::pair_action_group(n)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree5_orders_match_table() {
        let orders: Vec<u64> = degree5_benchmark().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![5, 10, 20, 60, 120]);
    }

    #[test]
    fn degenerate_constructors() {
        assert_eq!(cyclic(1).order(), 1);
        assert_eq!(dihedral(3).order(), symmetric(3).order());
        assert_eq!(dihedral(2).order(), 2);
        assert_eq!(alternating(2).order(), 1);
    }

    #[test]
    fn named_lookup() {
        assert_eq!(named("cyclic5").unwrap().order(), 5);
        assert_eq!(named("frobenius20").unwrap().order(), 20);
        assert_eq!(named("pairs4").unwrap().degree(), 6);
        assert!(named("sporadic7").is_err());
        assert!(named("cyclic").is_err());
    }

    #[test]
    fn group_file_roundtrip() {
        let g = parse_group_file("degree 5\n(1,2,3,4,5)\n(2,3,5,4)\n").unwrap();
        assert_eq!(g.order(), 20);
        let with_comments = "# Frobenius group\ndegree 5\n\n(1,2,3,4,5)\n(2,3,5,4)\n";
        assert_eq!(parse_group_file(with_comments).unwrap().order(), 20);
    }

    #[test]
    fn group_file_rejects_bad_input() {
        assert!(parse_group_file("").is_err());
        assert!(parse_group_file("(1,2)\n").is_err());
        assert!(parse_group_file("degree 3\n(1,4)\n").is_err());
    }

    #[test]
    fn staircase_shape() {
        assert_eq!(staircase(5), vec![4, 3, 2, 1, 0]);
    }
}
