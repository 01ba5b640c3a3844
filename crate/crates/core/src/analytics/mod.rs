//! Closed-form quantities for `G(n, m, p)`.
//!
//! Everything here is a pure function. Tail bounds are evaluated in log space
//! and pmfs are built by ratio recurrences from the mode, so nothing overflows
//! for the parameter ranges the harness uses (`n, m` up to ~10^5).

mod degree_law;
mod edge_prob;
mod rate;
mod roots;
mod threshold;

pub use degree_law::{degree_pmf, total_variation, DegreeLawKind, DegreeModel};
pub use edge_prob::{q_approx, q_exact, zeta_bound};
pub use rate::{binom_tail_exact, binomial_pmf, rate_h, tail_bound, TailBoundQuery, TailDirection};
pub use roots::{envelope_fn, solve_a, Branch, RootResult, ROOT_TOLERANCE};
pub use threshold::threshold_p;

use crate::{Error, Result};

pub(crate) fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::argument(format!(
            "{name} must lie in [0, 1], got {p}"
        )))
    }
}
