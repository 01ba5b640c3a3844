//! Random intersection graph laboratory.
//!
//! A random intersection graph `G(n, m, p)` is built from a bipartite model
//! `G*(n, m, p)`: each of `n` vertices independently attaches to each of `m`
//! objects with probability `p`, and two vertices are adjacent exactly when
//! their object sets intersect.
//!
//! The crate is split into three layers:
//!
//! - [`model`] samples the bipartite model, projects it to the intersection
//!   graph and answers structural queries (adjacency, degree, connectivity).
//! - [`analytics`] holds the closed-form quantities: edge probability and its
//!   Taylor remainder bound, the Chernoff rate function, binomial tail bounds,
//!   the connectivity threshold curve, the degree-envelope roots and two
//!   degree laws.
//! - [`montecarlo`] is a seeded, order-independent experiment harness that
//!   checks the analytic predictions against simulation.
//!
//! [`cli`] is the command-line front end used by the `rig-lab` binary.
//!
//! ```
//! use rig_lab::model::{ModelParams, sample_assignment, project};
//!
//! let params = ModelParams::new(6, 4, 0.5).unwrap();
//! let assignment = sample_assignment(&params, 42);
//! let graph = project(&assignment);
//! assert_eq!(graph.vertex_count(), 6);
//! ```

pub mod analytics;
pub mod cli;
mod error;
pub mod model;
pub mod montecarlo;
pub mod svg;

pub use error::{Error, Result};

/// Library version, stamped into every emitted artifact.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
