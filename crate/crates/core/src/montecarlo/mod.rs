//! Seeded Monte Carlo harness.
//!
//! Every trial draws from its own seed, `derive_trial_seed(master, grid, trial)`,
//! and per-trial results are aggregated in trial-index order. The outcome of
//! an experiment is therefore a pure function of its [`ExperimentSpec`],
//! whatever the [`Execution`] mode.

mod experiments;
mod report;
mod runner;
mod seed;
mod spec;
mod stats;

pub use experiments::{
    run_connectivity_sweep, run_degree_dist, run_degree_scaling, run_edge_prob, ConnectivityRecord,
    DegreeDistReport, DegreeScalingRecord, EdgeProbRecord, Trend,
};
pub use report::{run_experiment, ExperimentOutput, CSV_COLUMNS};
pub use runner::{run_trials, Execution};
pub use seed::{derive_trial_seed, SEED_DERIVATION};
pub use spec::{DegreePoint, EdgePoint, ExperimentKind, ExperimentSpec, GridPoint, MRule};
pub use stats::{
    mean_estimate, proportion_estimate, quantile, wilson_interval, EstimateRecord, RatioSummary,
    Z95,
};
