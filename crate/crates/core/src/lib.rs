//! Exact solvers for DP-coloring (correspondence coloring) and partial
//! DP-coloring of small graphs.
//!
//! A `t`-fold cover of a graph `G` assigns every vertex a list of `t` slots
//! and every edge a matching between the endpoint lists.  An independent set
//! in the cover graph picking at most one slot per list is a partial
//! transversal; `alpha_t_dp` is the worst case over all covers of the largest
//! partial transversal, and `chi_dp` is the least fold at which every cover
//! admits a full transversal.  Covers are enumerated up to gauge equivalence
//! (per-vertex slot relabeling), which fixes spanning-forest matchings to the
//! identity.  For fold 2 every cover is a twist vector in GF(2) over the
//! edges and feasibility reduces to cycle parity, handled by `twist`.
//!
//! Everything here is exact: searches are branch and bound over explicit
//! state, never heuristic, and every search is metered by [`Budget`] so
//! runaway instances fail with a budget error instead of an approximation.

pub mod bounds;
mod budget;
pub mod cover;
mod error;
pub mod export;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod rational;
mod subsets;
pub mod transversal;
pub mod twist;

pub use budget::Budget;
pub use error::{CoverViolation, Error, Resource, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use rational::Ratio;
