//! Enumeration of integer vectors up to the action of a permutation group
//! permuting coordinates, by orderly generation over a prefix tree of
//! lex-maximal orbit representatives.
//!
//! The pieces:
//! - [`perm`], [`group`]: permutations, stabilizer chains, set stabilizers,
//!   intersections;
//! - [`canonical`]: the level-by-level canonical test;
//! - [`enum_tree`]: the generation tree, lazy BFS/DFS iterators and run
//!   statistics;
//! - [`oracle`]: independent brute-force and Burnside cross-checks;
//! - [`poly`], [`galois`]: sparse invariant polynomials and primitive
//!   invariants by stabilizer refinement;
//! - [`graphs`]: graphs up to isomorphism as an application of the pair
//!   action;
//! - [`catalog`]: bundled groups and the group file format.

pub mod canonical;
pub mod catalog;
pub mod enum_tree;
pub mod error;
pub mod galois;
pub mod graphs;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod poly;

pub use error::{Error, Result};
pub use group::PermutationGroup;
pub use perm::{IntVec, Permutation};
