//! Minimum-degree stability thresholds of graphs.
//!
//! For a graph `H` with chromatic number `r + 1`, `δ_H` is the least `c` such
//! that every `H`-free graph with minimum degree above `c·n` is `o(n²)` edge
//! deletions from `r`-partite. This crate computes `δ_H` exactly through
//! homomorphism tests against fixed target sequences, builds the extremal
//! blow-up families that witness the lower bounds, and checks the supporting
//! lemmas by brute force on small corpora.

pub mod cli;
pub mod delta;
pub mod error;
pub mod gallery;
pub mod graph;
pub mod hom;
pub mod rational;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Format, Graph, GraphKind, Weighting};
pub use rational::Rational;
