//! Crossings and nestings of signed permutations.
//!
//! A signed permutation of rank `n` is drawn as a symmetric arc diagram on the
//! vertices `-n..=-1, 1..=n`; only the arcs above the line are stored since the
//! lower half is their mirror image. On top of that model the crate provides
//!
//! * pair statistics (`cro`, `nes`) and maximal chain statistics (`cro*`, `nes*`),
//! * the split / rerouting involution that swaps `cro` and `nes`,
//! * the bijection to 0/1 fillings of Young diagrams and the chain-interchanging
//!   map built on it,
//! * exhaustive enumeration of the hyperoctahedral group with verifiers for the
//!   symmetric joint distributions.

pub mod enumeration;
mod error;
pub mod fillings;
pub mod involution;
pub mod permutation;
pub mod statistics;

pub use error::{Error, Result};
pub use permutation::{Arc, DegreeSequence, SignedPermutation, UpperDiagram, VertexKind};
pub use statistics::PermutationStats;
