use super::check_probability;
use crate::{Error, Result};

/// Exact probability that two fixed vertices share an object:
/// `1 - (1 - p²)^m`.
pub fn q_exact(m: usize, p: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::argument("m must be at least 1"));
    }
    check_probability("p", p)?;
    let x = p * p;
    Ok(match m {
        1 => x,
        2 => 2.0 * x - x * x,
        _ => -(m as f64 * (-x).ln_1p()).exp_m1(),
    })
}

/// First-order approximation `m p²`. Not clamped to 1.
pub fn q_approx(m: usize, p: f64) -> f64 {
    m as f64 * (p * p)
}

/// Upper bound `m(m-1)/2 · p⁴` on the second-order Taylor remainder, so that
/// `q_approx - zeta_bound <= q_exact <= q_approx`.
pub fn zeta_bound(m: usize, p: f64) -> f64 {
    let x = p * p;
    let pairs = m as f64 * (m as f64 - 1.0) / 2.0;
    pairs * x * x
}
