//! The bipartite model `G*(n, m, p)` and its projection `G(n, m, p)`.
//!
//! Vertices and objects are 0-based indices. Sampling is a pure function of
//! `(params, seed)`; every vertex draws from its own ChaCha8 stream so the
//! assignment does not depend on generation order.

mod assignment;
mod format;
mod graph;
mod params;

pub use assignment::{
    pair_adjacent, sample_assignment, sample_assignment_coupled, vertex_degree, BipartiteAssignment,
};
pub use format::{
    parse_assignment, parse_edge_list, write_assignment, write_edge_list, EdgeListHeader,
};
pub use graph::{degree, is_connected, project, DisjointSet, IntersectionGraph};
pub use params::ModelParams;
