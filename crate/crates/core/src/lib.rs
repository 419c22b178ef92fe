//! Exact directed domination of small graphs.
//!
//! The crate computes the directed domination number `γ(D)` of a digraph and
//! its maximum `Γ_d(G)` over all orientations of a graph (together with the
//! `r`-fold and distance-`d` variants), the classical invariants those
//! quantities are bounded by, the greedy partition engine that realizes the
//! upper bounds constructively, and a catalog of every closed-form bound with
//! an exhaustive verification harness.
//!
//! Everything works on graphs of order at most 64; vertex sets are `u64`
//! bitsets (see [`VertexSet`]).

pub mod bounds;
pub mod domination;
mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod partition;
mod rng;
mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Digraph, Graph, Orientation};
pub use rng::{Seed, SplitMix64};
pub use vertex_set::VertexSet;
