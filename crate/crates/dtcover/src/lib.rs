//! A laboratory for decision-tree complexity over graph gadgets.
//!
//! The crate is organized around a single pipeline: take an undirected
//! graph, lift it to a boolean "edge indicator" function (plain or
//! amplified with duplicated variables), and relate the decision-tree
//! complexity of that function to vertex covers of the graph. Everything
//! is built for desk-scale instances where exact brute-force oracles can
//! certify every claimed inequality:
//!
//! * [`graph`] — graphs, exact/greedy/partial vertex-cover solvers, and
//!   restricted edge neighborhoods.
//! * [`dtree`] — decision trees, paths, restrictions, boolean functions,
//!   certificates, and relevant variables over point sets.
//! * [`gadget`] — the `IsEdge` and `ell-IsEdge` target functions and
//!   their coordinate layout.
//! * [`coreset`] — labeled point sets and distributions that distill the
//!   hardness of the gadgets, plus the distillation lower bound.
//! * [`minimize`] — exact decision-tree minimization over the full cube,
//!   over a point set, and under an error budget (Pareto front).
//! * [`reduction`] — tree constructors from vertex covers and cover
//!   extractors from trees.
//! * [`harness`] — end-to-end deciders, membership/example oracles,
//!   parameter calculators, and built-in learners.
//!
//! All operations are pure functions of their inputs unless documented
//! otherwise; the few stateful pieces (oracles, RNGs) are seeded and
//! thread-safe.

pub mod bits;
pub mod coreset;
pub mod dtree;
pub mod error;
pub mod gadget;
pub mod graph;
pub mod harness;
pub mod minimize;
pub mod reduction;

pub use bits::BitString;
pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
