use serde::{Deserialize, Serialize};

use crate::analytics::threshold_p;
use crate::model::ModelParams;
use crate::{Error, Result};

/// How the object count follows the vertex count in `(n, α)` sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum MRule {
    /// `m = n`
    #[default]
    Equal,
    /// `m = max(1, ⌊n^β⌋)`
    Power { beta: f64 },
    /// constant `m`
    Fixed { m: usize },
}

impl MRule {
    pub fn object_count(&self, n: usize) -> usize {
        match *self {
            MRule::Equal => n,
            MRule::Power { beta } => ((n as f64).powf(beta).floor() as usize).max(1),
            MRule::Fixed { m } => m,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgePoint {
    pub m: usize,
    pub p: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegreePoint {
    pub n: usize,
    pub m: usize,
    pub p: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExperimentKind {
    /// Adjacency frequency of two vertices at each `(m, p)`.
    EdgeProb { points: Vec<EdgePoint> },
    /// Connected fraction at `p = threshold_p(α, m, n)` over the `α × n` grid.
    ConnectivitySweep {
        n: Vec<usize>,
        alpha: Vec<f64>,
        #[serde(default)]
        m_rule: MRule,
    },
    /// Empirical degree law of vertex 0 against both analytic laws.
    DegreeDist { points: Vec<DegreePoint> },
    /// `X / n^(1-α)` against the envelope roots for rate constant `c`.
    DegreeScaling {
        n: Vec<usize>,
        alpha: Vec<f64>,
        #[serde(default)]
        m_rule: MRule,
        c: f64,
    },
}

impl ExperimentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::EdgeProb { .. } => "edge-prob",
            ExperimentKind::ConnectivitySweep { .. } => "connectivity-sweep",
            ExperimentKind::DegreeDist { .. } => "degree-dist",
            ExperimentKind::DegreeScaling { .. } => "degree-scaling",
        }
    }
}

/// A fully specified experiment, as read from JSON:
///
/// ```json
/// {"kind": "connectivity-sweep", "n": [100, 400], "alpha": [1.0, 3.0],
///  "m_rule": {"rule": "equal"}, "trials": 200, "master_seed": 7}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    #[serde(flatten)]
    pub kind: ExperimentKind,
    pub trials: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub master_seed: Option<u64>,
}

/// One resolved grid point: the model parameters plus `α` for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridPoint {
    pub n: usize,
    pub m: usize,
    pub p: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

impl GridPoint {
    pub fn params(&self) -> ModelParams {
        ModelParams::new(self.n, self.m, self.p).expect("grid points are validated")
    }
}

impl ExperimentSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: ExperimentSpec =
            serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed.unwrap_or(0)
    }

    /// Grid points in evaluation order. Sweeps are enumerated `α`-major, so
    /// rows for one `α` are contiguous and ordered as the `n` list.
    pub fn grid(&self) -> Result<Vec<GridPoint>> {
        let sweep = |ns: &[usize], alphas: &[f64], rule: &MRule| -> Result<Vec<GridPoint>> {
            let mut points = Vec::new();
            for &alpha in alphas {
                if !alpha.is_finite() {
                    return Err(Error::argument(format!(
                        "alpha must be finite, got {alpha}"
                    )));
                }
                for &n in ns {
                    let m = rule.object_count(n);
                    let p = threshold_p(alpha, m, n);
                    ModelParams::new(n, m, p)?;
                    points.push(GridPoint {
                        n,
                        m,
                        p,
                        alpha: Some(alpha),
                    });
                }
            }
            Ok(points)
        };
        let points = match &self.kind {
            ExperimentKind::EdgeProb { points } => points
                .iter()
                .map(|pt| {
                    ModelParams::new(2, pt.m, pt.p)?;
                    Ok(GridPoint {
                        n: 2,
                        m: pt.m,
                        p: pt.p,
                        alpha: None,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
            ExperimentKind::DegreeDist { points } => points
                .iter()
                .map(|pt| {
                    ModelParams::new(pt.n, pt.m, pt.p)?;
                    Ok(GridPoint {
                        n: pt.n,
                        m: pt.m,
                        p: pt.p,
                        alpha: None,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
            ExperimentKind::ConnectivitySweep { n, alpha, m_rule } => sweep(n, alpha, m_rule)?,
            ExperimentKind::DegreeScaling {
                n, alpha, m_rule, ..
            } => sweep(n, alpha, m_rule)?,
        };
        if points.is_empty() {
            return Err(Error::argument("empty parameter grid"));
        }
        Ok(points)
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::argument("trials must be at least 1"));
        }
        if let ExperimentKind::DegreeScaling { alpha, c, .. } = &self.kind {
            if let Some(a) = alpha.iter().find(|a| !(**a > 0.0 && **a < 1.0)) {
                return Err(Error::domain(format!(
                    "degree-scaling requires alpha in (0, 1), got {a}"
                )));
            }
            if !(*c > 0.0 && *c < 1.0) {
                return Err(Error::domain(format!(
                    "degree-scaling requires 0 < c < 1 so both envelope roots exist, got {c}"
                )));
            }
        }
        if let ExperimentKind::ConnectivitySweep { m_rule, .. }
        | ExperimentKind::DegreeScaling { m_rule, .. } = &self.kind
        {
            match *m_rule {
                MRule::Power { beta } if !(beta.is_finite() && beta >= 0.0) => {
                    return Err(Error::argument(format!("beta must be >= 0, got {beta}")))
                }
                MRule::Fixed { m: 0 } => return Err(Error::argument("fixed m must be >= 1")),
                _ => {}
            }
        }
        self.grid().map(|_| ())
    }
}
