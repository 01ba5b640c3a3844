use serde::{Deserialize, Serialize};

use super::{binomial_pmf, q_exact};
use crate::model::ModelParams;
use crate::Result;

/// Mixture components lighter than this are dropped; the lost mass is at
/// most `(m + 1) · 1e-20`.
const MIXTURE_WEIGHT_FLOOR: f64 = 1e-20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeLawKind {
    /// `Bi(n - 1, q)` with `q = 1 - (1 - p²)^m`: treats the `n - 1`
    /// adjacency indicators of a vertex as independent.
    PaperBinomial,
    /// Exact law: given `|W_v| = s`, the indicators are independent
    /// `Bernoulli(1 - (1 - p)^s)`, so the pmf is
    /// `Σ_s Bi(m, p)(s) · Bi(n - 1, 1 - (1 - p)^s)`.
    ExactMixture,
}

/// A degree pmf over `0..n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeModel {
    pub kind: DegreeLawKind,
    pub pmf: Vec<f64>,
}

impl DegreeModel {
    pub fn mean(&self) -> f64 {
        self.pmf.iter().enumerate().map(|(k, w)| k as f64 * w).sum()
    }
}

/// Degree law of a fixed vertex in `G(n, m, p)`.
pub fn degree_pmf(n: usize, m: usize, p: f64, kind: DegreeLawKind) -> Result<DegreeModel> {
    ModelParams::new(n, m, p)?;
    let others = n - 1;
    let pmf = match kind {
        DegreeLawKind::PaperBinomial => binomial_pmf(others, q_exact(m, p)?),
        DegreeLawKind::ExactMixture => {
            let mut pmf = vec![0.0; n];
            let log_miss = (-p).ln_1p();
            for (s, &weight) in binomial_pmf(m, p).iter().enumerate() {
                if weight < MIXTURE_WEIGHT_FLOOR {
                    continue;
                }
                let share = if p == 1.0 && s > 0 {
                    1.0
                } else {
                    -(s as f64 * log_miss).exp_m1()
                };
                for (acc, x) in pmf.iter_mut().zip(binomial_pmf(others, share)) {
                    *acc += weight * x;
                }
            }
            pmf
        }
    };
    Ok(DegreeModel { kind, pmf })
}

/// Half the L1 distance between two pmfs; the shorter one is zero-padded.
pub fn total_variation(a: &[f64], b: &[f64]) -> f64 {
    let len = a.len().max(b.len());
    let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    0.5 * (0..len).map(|i| (at(a, i) - at(b, i)).abs()).sum::<f64>()
}
