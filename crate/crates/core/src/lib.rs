//! Virtual pure braid groups `VP_n` as a simplicial group.
//!
//! Words live in [`word`], presentations and the braid dictionary in
//! [`presentation`], faces and degeneracies in [`simplicial`], and the
//! three-valued word-problem engine in [`oracle`]. Cabling elements are in
//! [`cabling`], the Milnor map in [`milnor`], Brunnian tests in
//! [`brunnian`], suite plumbing in [`suite`], and the `vpb` command line in
//! [`cli`].
//!
//! Conventions used throughout: `[a, b] = a^-1 b^-1 a b`, iterated brackets
//! are left-normed, `y^x = x^-1 y x`. Strands are 1-indexed, simplicial
//! indices are 0-indexed, and `d_i`, `s_i` act on strand `i + 1`.

pub mod brunnian;
pub mod cabling;
pub mod cli;
pub mod error;
pub mod milnor;
pub mod oracle;
pub mod presentation;
pub mod simplicial;
pub mod suite;
pub mod word;

pub use error::{Error, Result};
pub use oracle::{equal, triviality, Budget, Verdict};
pub use word::{Alphabet, Generator, Letter, Word};
