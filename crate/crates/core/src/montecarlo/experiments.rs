use serde::Serialize;

use super::stats::{proportion_estimate, EstimateRecord, RatioSummary};
use super::{derive_trial_seed, run_trials, Execution, ExperimentKind, ExperimentSpec, GridPoint};
use crate::analytics::{
    degree_pmf, q_approx, q_exact, rate_h, solve_a, total_variation, zeta_bound, Branch,
    DegreeLawKind,
};
use crate::model::{is_connected, pair_adjacent, project, sample_assignment, vertex_degree};
use crate::{Error, Result};

fn wrong_kind(expected: &str, spec: &ExperimentSpec) -> Error {
    Error::argument(format!(
        "expected a {expected} spec, got {}",
        spec.kind.name()
    ))
}

fn estimate(
    spec: &ExperimentSpec,
    grid_index: usize,
    point: GridPoint,
    outcomes: Vec<bool>,
) -> EstimateRecord {
    let keyed: Vec<(u64, bool)> = outcomes
        .into_iter()
        .enumerate()
        .map(|(i, hit)| (i as u64, hit))
        .collect();
    let (estimate, std_error, ci95) = proportion_estimate(&keyed);
    EstimateRecord {
        grid_index: grid_index as u64,
        grid_point: point,
        estimate,
        std_error,
        ci95,
        trials: spec.trials,
        master_seed: spec.master_seed(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeProbRecord {
    #[serde(flatten)]
    pub record: EstimateRecord,
    pub q_exact: f64,
    pub q_approx: f64,
    pub zeta_bound: f64,
}

impl EdgeProbRecord {
    /// `|estimate - q_exact| <= 3 · std_error`
    pub fn within_3se(&self) -> bool {
        (self.record.estimate - self.q_exact).abs() <= 3.0 * self.record.std_error
    }
}

/// Estimates the adjacency probability of two vertices at every `(m, p)`.
pub fn run_edge_prob(spec: &ExperimentSpec, execution: Execution) -> Result<Vec<EdgeProbRecord>> {
    if !matches!(spec.kind, ExperimentKind::EdgeProb { .. }) {
        return Err(wrong_kind("edge-prob", spec));
    }
    spec.validate()?;
    let seed = spec.master_seed();
    spec.grid()?
        .into_iter()
        .enumerate()
        .map(|(g, point)| {
            let params = point.params();
            let outcomes = run_trials(spec.trials, execution, |t| {
                let a = sample_assignment(&params, derive_trial_seed(seed, g as u64, t));
                pair_adjacent(&a, 0, 1).expect("two vertices")
            });
            Ok(EdgeProbRecord {
                record: estimate(spec, g, point, outcomes),
                q_exact: q_exact(point.m, point.p)?,
                q_approx: q_approx(point.m, point.p),
                zeta_bound: zeta_bound(point.m, point.p),
            })
        })
        .collect()
}

/// Direction of a sweep estimate relative to the previous `n` at the same `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trend {
    Start,
    Up,
    Flat,
    Down,
}

impl Trend {
    pub fn as_str(&self) -> &'static str {
        match self {
            Trend::Start => "start",
            Trend::Up => "up",
            Trend::Flat => "flat",
            Trend::Down => "down",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConnectivityRecord {
    #[serde(flatten)]
    pub record: EstimateRecord,
    /// Exact pairwise adjacency probability at this grid point.
    pub q_exact: f64,
    /// `m p²`, which equals `n^-α` on the threshold curve.
    pub m_p2: f64,
    /// `n^(-α/2)`, the pairwise bound quoted alongside the threshold.
    pub pair_bound: f64,
    /// `(n - 1) q_exact`
    pub expected_degree: f64,
    pub trend: Trend,
}

/// Fraction of connected samples at `p = threshold_p(α, m, n)` on each grid point.
pub fn run_connectivity_sweep(
    spec: &ExperimentSpec,
    execution: Execution,
) -> Result<Vec<ConnectivityRecord>> {
    if !matches!(spec.kind, ExperimentKind::ConnectivitySweep { .. }) {
        return Err(wrong_kind("connectivity-sweep", spec));
    }
    spec.validate()?;
    let seed = spec.master_seed();
    let mut records: Vec<ConnectivityRecord> = Vec::new();
    for (g, point) in spec.grid()?.into_iter().enumerate() {
        let params = point.params();
        let outcomes = run_trials(spec.trials, execution, |t| {
            let a = sample_assignment(&params, derive_trial_seed(seed, g as u64, t));
            is_connected(&project(&a))
        });
        let record = estimate(spec, g, point, outcomes);
        let alpha = point.alpha.expect("sweep points carry alpha");
        let trend = match records.last() {
            Some(prev) if prev.record.grid_point.alpha == point.alpha => {
                match record.estimate.partial_cmp(&prev.record.estimate) {
                    Some(std::cmp::Ordering::Greater) => Trend::Up,
                    Some(std::cmp::Ordering::Less) => Trend::Down,
                    _ => Trend::Flat,
                }
            }
            _ => Trend::Start,
        };
        let q = q_exact(point.m, point.p)?;
        records.push(ConnectivityRecord {
            record,
            q_exact: q,
            m_p2: q_approx(point.m, point.p),
            pair_bound: (point.n as f64).powf(-alpha / 2.0),
            expected_degree: (point.n - 1) as f64 * q,
            trend,
        });
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeDistReport {
    pub grid_index: u64,
    pub grid_point: GridPoint,
    pub trials: u64,
    pub master_seed: u64,
    pub empirical: Vec<f64>,
    pub paper_binomial: Vec<f64>,
    pub exact_mixture: Vec<f64>,
    pub tv_paper_binomial: f64,
    pub tv_exact_mixture: f64,
    pub mean_degree: f64,
    /// `(n - 1) q_exact`, shared by both analytic laws.
    pub expected_degree: f64,
}

/// Empirical degree law of vertex 0 and its total-variation distance to the
/// binomial and the exact conditional-mixture laws.
pub fn run_degree_dist(
    spec: &ExperimentSpec,
    execution: Execution,
) -> Result<Vec<DegreeDistReport>> {
    if !matches!(spec.kind, ExperimentKind::DegreeDist { .. }) {
        return Err(wrong_kind("degree-dist", spec));
    }
    spec.validate()?;
    let seed = spec.master_seed();
    spec.grid()?
        .into_iter()
        .enumerate()
        .map(|(g, point)| {
            let params = point.params();
            let degrees = run_trials(spec.trials, execution, |t| {
                let a = sample_assignment(&params, derive_trial_seed(seed, g as u64, t));
                vertex_degree(&a, 0).expect("vertex 0 exists")
            });
            let mut counts = vec![0u64; point.n];
            for d in &degrees {
                counts[*d] += 1;
            }
            let total = spec.trials as f64;
            let empirical: Vec<f64> = counts.iter().map(|&c| c as f64 / total).collect();
            let mean_degree = counts
                .iter()
                .enumerate()
                .map(|(d, &c)| (d as u64 * c) as f64)
                .sum::<f64>()
                / total;
            let paper = degree_pmf(point.n, point.m, point.p, DegreeLawKind::PaperBinomial)?.pmf;
            let mixture = degree_pmf(point.n, point.m, point.p, DegreeLawKind::ExactMixture)?.pmf;
            Ok(DegreeDistReport {
                grid_index: g as u64,
                grid_point: point,
                trials: spec.trials,
                master_seed: seed,
                tv_paper_binomial: total_variation(&empirical, &paper),
                tv_exact_mixture: total_variation(&empirical, &mixture),
                empirical,
                paper_binomial: paper,
                exact_mixture: mixture,
                mean_degree,
                expected_degree: (point.n - 1) as f64 * q_exact(point.m, point.p)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeScalingRecord {
    pub grid_index: u64,
    pub n: usize,
    pub m: usize,
    pub alpha: f64,
    /// `1 - α`
    pub delta: f64,
    pub p: f64,
    pub c: f64,
    pub trials: u64,
    pub master_seed: u64,
    /// Summary of `X / n^δ`.
    pub ratios: RatioSummary,
    /// `(n - 1) q_exact / n^δ`
    pub expected_ratio: f64,
    /// `(a_lower(c), a_upper(c))`
    pub envelope: (f64, f64),
    pub exceed_upper_freq: f64,
    pub exceed_upper_se: f64,
    pub exceed_lower_freq: f64,
    pub exceed_lower_se: f64,
    /// `exp(-c n^δ)`
    pub chernoff_upper: f64,
    /// `exp(-c n^δ)`
    pub chernoff_lower: f64,
    /// Chernoff bound for `Bi(n - 1, q_exact)` at `a_upper · n^δ`, i.e.
    /// `exp(μ H(μ / K))` with the exact mean `μ`.
    pub binomial_bound_upper: f64,
    /// Same at `a_lower · n^δ`.
    pub binomial_bound_lower: f64,
}

impl DegreeScalingRecord {
    pub fn mean_in_envelope(&self) -> bool {
        self.envelope.0 <= self.ratios.mean && self.ratios.mean <= self.envelope.1
    }
}

/// Finite-sample proxy for the almost-sure degree envelopes: the ratio
/// `X / n^δ` is summarized and its tail frequencies beyond the envelope roots
/// are compared with the Chernoff prediction `exp(-c n^δ)`.
pub fn run_degree_scaling(
    spec: &ExperimentSpec,
    execution: Execution,
) -> Result<Vec<DegreeScalingRecord>> {
    let c = match spec.kind {
        ExperimentKind::DegreeScaling { c, .. } => c,
        _ => return Err(wrong_kind("degree-scaling", spec)),
    };
    spec.validate()?;
    let a_lower = solve_a(c, Branch::Lower)?.a;
    let a_upper = solve_a(c, Branch::Upper)?.a;
    let seed = spec.master_seed();
    spec.grid()?
        .into_iter()
        .enumerate()
        .map(|(g, point)| {
            let params = point.params();
            let alpha = point.alpha.expect("sweep points carry alpha");
            let delta = 1.0 - alpha;
            let scale = (point.n as f64).powf(delta);
            let ratios: Vec<(u64, f64)> = run_trials(spec.trials, execution, |t| {
                let a = sample_assignment(&params, derive_trial_seed(seed, g as u64, t));
                (
                    t,
                    vertex_degree(&a, 0).expect("vertex 0 exists") as f64 / scale,
                )
            });
            let above: Vec<(u64, bool)> = ratios.iter().map(|&(t, r)| (t, r >= a_upper)).collect();
            let below: Vec<(u64, bool)> = ratios.iter().map(|&(t, r)| (t, r <= a_lower)).collect();
            let (exceed_upper_freq, exceed_upper_se, _) = proportion_estimate(&above);
            let (exceed_lower_freq, exceed_lower_se, _) = proportion_estimate(&below);
            let mean = (point.n - 1) as f64 * q_exact(point.m, point.p)?;
            let binomial_bound = |a: f64| -> Result<f64> {
                if mean == 0.0 {
                    return Ok(0.0);
                }
                Ok((mean * rate_h(mean / (a * scale))?).exp())
            };
            let chernoff = (-c * scale).exp();
            Ok(DegreeScalingRecord {
                grid_index: g as u64,
                n: point.n,
                m: point.m,
                alpha,
                delta,
                p: point.p,
                c,
                trials: spec.trials,
                master_seed: seed,
                ratios: RatioSummary::from_values(&ratios),
                expected_ratio: mean / scale,
                envelope: (a_lower, a_upper),
                exceed_upper_freq,
                exceed_upper_se,
                exceed_lower_freq,
                exceed_lower_se,
                chernoff_upper: chernoff,
                chernoff_lower: chernoff,
                binomial_bound_upper: binomial_bound(a_upper)?,
                binomial_bound_lower: binomial_bound(a_lower)?,
            })
        })
        .collect()
}
