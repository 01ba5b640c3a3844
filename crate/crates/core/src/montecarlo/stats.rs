use serde::Serialize;

use super::GridPoint;

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959_963_984_540_054;

/// A Monte Carlo point estimate with its uncertainty and provenance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateRecord {
    pub grid_index: u64,
    pub grid_point: GridPoint,
    pub estimate: f64,
    pub std_error: f64,
    pub ci95: (f64, f64),
    pub trials: u64,
    pub master_seed: u64,
}

/// Wilson score interval for `successes` out of `trials`, clamped to contain
/// the point estimate and to lie in `[0, 1]`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 / denom * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    (
        (center - half).min(phat).max(0.0),
        (center + half).max(phat).min(1.0),
    )
}

/// `(estimate, std_error, wilson ci95)` from per-trial outcomes keyed by trial
/// index. The result does not depend on the order of `outcomes`.
pub fn proportion_estimate(outcomes: &[(u64, bool)]) -> (f64, f64, (f64, f64)) {
    let trials = outcomes.len() as u64;
    let successes = outcomes.iter().filter(|(_, hit)| *hit).count() as u64;
    let phat = successes as f64 / trials as f64;
    let se = (phat * (1.0 - phat) / trials as f64).sqrt();
    (phat, se, wilson_interval(successes, trials))
}

/// `(mean, std_error, normal ci95)` of trial-keyed values. Values are summed
/// in trial-index order so the result is independent of input order.
pub fn mean_estimate(values: &[(u64, f64)]) -> (f64, f64, (f64, f64)) {
    let mut sorted = values.to_vec();
    sorted.sort_by_key(|&(i, _)| i);
    let n = sorted.len() as f64;
    let mean = sorted.iter().map(|&(_, x)| x).sum::<f64>() / n;
    let var = if sorted.len() > 1 {
        sorted.iter().map(|&(_, x)| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    let se = (var / n).sqrt();
    (mean, se, (mean - Z95 * se, mean + Z95 * se))
}

/// Linear-interpolation quantile (type 7) of an ascending slice.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Distribution summary of a ratio sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioSummary {
    pub mean: f64,
    pub std_error: f64,
    pub ci95: (f64, f64),
    pub min: f64,
    pub q05: f64,
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
    pub q95: f64,
    pub max: f64,
}

impl RatioSummary {
    pub fn from_values(values: &[(u64, f64)]) -> Self {
        let (mean, std_error, ci95) = mean_estimate(values);
        let mut sorted: Vec<f64> = values.iter().map(|&(_, x)| x).collect();
        sorted.sort_by(f64::total_cmp);
        RatioSummary {
            mean,
            std_error,
            ci95,
            min: sorted[0],
            q05: quantile(&sorted, 0.05),
            q25: quantile(&sorted, 0.25),
            median: quantile(&sorted, 0.5),
            q75: quantile(&sorted, 0.75),
            q95: quantile(&sorted, 0.95),
            max: sorted[sorted.len() - 1],
        }
    }
}
