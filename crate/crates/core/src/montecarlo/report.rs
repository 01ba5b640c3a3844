//! Serialized experiment outputs.
//!
//! CSV: two `#` provenance lines, a header row and one row per grid point,
//! with the column order fixed per kind (see [`CSV_COLUMNS`]). Floats use the
//! shortest representation that round-trips. JSON: a summary echoing the
//! spec, its SHA-256, the seeding scheme, the library version and every record.

use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use super::experiments::{
    run_connectivity_sweep, run_degree_dist, run_degree_scaling, run_edge_prob, ConnectivityRecord,
    DegreeDistReport, DegreeScalingRecord, EdgeProbRecord,
};
use super::{EstimateRecord, Execution, ExperimentKind, ExperimentSpec, SEED_DERIVATION};
use crate::svg::{LineChart, Series};
use crate::Result;

/// CSV column order for each experiment kind.
pub const CSV_COLUMNS: [(&str, &[&str]); 4] = [
    (
        "edge-prob",
        &[
            "grid_index",
            "m",
            "p",
            "trials",
            "master_seed",
            "estimate",
            "std_error",
            "ci95_low",
            "ci95_high",
            "q_exact",
            "q_approx",
            "zeta_bound",
            "within_3se",
        ],
    ),
    (
        "connectivity-sweep",
        &[
            "grid_index",
            "n",
            "m",
            "alpha",
            "p",
            "trials",
            "master_seed",
            "estimate",
            "std_error",
            "ci95_low",
            "ci95_high",
            "q_exact",
            "m_p2",
            "pair_bound",
            "expected_degree",
            "trend",
        ],
    ),
    (
        "degree-dist",
        &[
            "grid_index",
            "n",
            "m",
            "p",
            "trials",
            "master_seed",
            "mean_degree",
            "expected_degree",
            "tv_paper_binomial",
            "tv_exact_mixture",
        ],
    ),
    (
        "degree-scaling",
        &[
            "grid_index",
            "n",
            "m",
            "alpha",
            "delta",
            "p",
            "c",
            "trials",
            "master_seed",
            "ratio_mean",
            "ratio_std_error",
            "ratio_ci95_low",
            "ratio_ci95_high",
            "ratio_min",
            "ratio_q05",
            "ratio_q25",
            "ratio_median",
            "ratio_q75",
            "ratio_q95",
            "ratio_max",
            "expected_ratio",
            "a_lower",
            "a_upper",
            "exceed_upper_freq",
            "exceed_upper_se",
            "exceed_lower_freq",
            "exceed_lower_se",
            "chernoff_upper",
            "chernoff_lower",
            "binomial_bound_upper",
            "binomial_bound_lower",
            "mean_in_envelope",
        ],
    ),
];

const SCALING_NOTE: &str = "limsup/liminf statements are asymptotic; tail frequencies \
against exp(-c n^delta) and envelope containment of the mean are a finite-sample proxy, not a proof";

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ExperimentOutput {
    EdgeProb(Vec<EdgeProbRecord>),
    Connectivity(Vec<ConnectivityRecord>),
    DegreeDist(Vec<DegreeDistReport>),
    DegreeScaling(Vec<DegreeScalingRecord>),
}

/// Validates `spec` and runs the experiment its kind names.
pub fn run_experiment(spec: &ExperimentSpec, execution: Execution) -> Result<ExperimentOutput> {
    Ok(match spec.kind {
        ExperimentKind::EdgeProb { .. } => {
            ExperimentOutput::EdgeProb(run_edge_prob(spec, execution)?)
        }
        ExperimentKind::ConnectivitySweep { .. } => {
            ExperimentOutput::Connectivity(run_connectivity_sweep(spec, execution)?)
        }
        ExperimentKind::DegreeDist { .. } => {
            ExperimentOutput::DegreeDist(run_degree_dist(spec, execution)?)
        }
        ExperimentKind::DegreeScaling { .. } => {
            ExperimentOutput::DegreeScaling(run_degree_scaling(spec, execution)?)
        }
    })
}

fn spec_hash(spec: &ExperimentSpec) -> String {
    Sha256::digest(spec.to_json().as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn estimate_cells(r: &EstimateRecord) -> [String; 4] {
    [
        r.estimate.to_string(),
        r.std_error.to_string(),
        r.ci95.0.to_string(),
        r.ci95.1.to_string(),
    ]
}

impl ExperimentOutput {
    pub fn kind(&self) -> &'static str {
        match self {
            ExperimentOutput::EdgeProb(_) => "edge-prob",
            ExperimentOutput::Connectivity(_) => "connectivity-sweep",
            ExperimentOutput::DegreeDist(_) => "degree-dist",
            ExperimentOutput::DegreeScaling(_) => "degree-scaling",
        }
    }

    pub fn columns(&self) -> &'static [&'static str] {
        CSV_COLUMNS
            .iter()
            .find(|(k, _)| *k == self.kind())
            .map(|(_, cols)| *cols)
            .expect("every kind has columns")
    }

    fn rows(&self) -> Vec<Vec<String>> {
        match self {
            ExperimentOutput::EdgeProb(recs) => recs
                .iter()
                .map(|r| {
                    let g = &r.record.grid_point;
                    let mut row = vec![
                        r.record.grid_index.to_string(),
                        g.m.to_string(),
                        g.p.to_string(),
                        r.record.trials.to_string(),
                        r.record.master_seed.to_string(),
                    ];
                    row.extend(estimate_cells(&r.record));
                    row.extend([
                        r.q_exact.to_string(),
                        r.q_approx.to_string(),
                        r.zeta_bound.to_string(),
                        r.within_3se().to_string(),
                    ]);
                    row
                })
                .collect(),
            ExperimentOutput::Connectivity(recs) => recs
                .iter()
                .map(|r| {
                    let g = &r.record.grid_point;
                    let mut row = vec![
                        r.record.grid_index.to_string(),
                        g.n.to_string(),
                        g.m.to_string(),
                        g.alpha.unwrap_or(f64::NAN).to_string(),
                        g.p.to_string(),
                        r.record.trials.to_string(),
                        r.record.master_seed.to_string(),
                    ];
                    row.extend(estimate_cells(&r.record));
                    row.extend([
                        r.q_exact.to_string(),
                        r.m_p2.to_string(),
                        r.pair_bound.to_string(),
                        r.expected_degree.to_string(),
                        r.trend.as_str().to_string(),
                    ]);
                    row
                })
                .collect(),
            ExperimentOutput::DegreeDist(reps) => reps
                .iter()
                .map(|r| {
                    let g = &r.grid_point;
                    vec![
                        r.grid_index.to_string(),
                        g.n.to_string(),
                        g.m.to_string(),
                        g.p.to_string(),
                        r.trials.to_string(),
                        r.master_seed.to_string(),
                        r.mean_degree.to_string(),
                        r.expected_degree.to_string(),
                        r.tv_paper_binomial.to_string(),
                        r.tv_exact_mixture.to_string(),
                    ]
                })
                .collect(),
            ExperimentOutput::DegreeScaling(recs) => recs
                .iter()
                .map(|r| {
                    let s = &r.ratios;
                    [
                        r.grid_index.to_string(),
                        r.n.to_string(),
                        r.m.to_string(),
                        r.alpha.to_string(),
                        r.delta.to_string(),
                        r.p.to_string(),
                        r.c.to_string(),
                        r.trials.to_string(),
                        r.master_seed.to_string(),
                    ]
                    .into_iter()
                    .chain(
                        [
                            s.mean,
                            s.std_error,
                            s.ci95.0,
                            s.ci95.1,
                            s.min,
                            s.q05,
                            s.q25,
                            s.median,
                            s.q75,
                            s.q95,
                            s.max,
                            r.expected_ratio,
                            r.envelope.0,
                            r.envelope.1,
                            r.exceed_upper_freq,
                            r.exceed_upper_se,
                            r.exceed_lower_freq,
                            r.exceed_lower_se,
                            r.chernoff_upper,
                            r.chernoff_lower,
                            r.binomial_bound_upper,
                            r.binomial_bound_lower,
                        ]
                        .iter()
                        .map(f64::to_string),
                    )
                    .chain([r.mean_in_envelope().to_string()])
                    .collect()
                })
                .collect(),
        }
    }

    pub fn to_csv(&self, spec: &ExperimentSpec) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(self.columns())
            .expect("in-memory write");
        for row in self.rows() {
            writer.write_record(&row).expect("in-memory write");
        }
        let body = String::from_utf8(writer.into_inner().expect("in-memory flush"))
            .expect("csv output is utf-8");
        format!(
            "# rig-lab {} kind={}\n# master_seed={} spec_sha256={}\n{body}",
            crate::VERSION,
            self.kind(),
            spec.master_seed(),
            spec_hash(spec)
        )
    }

    pub fn to_json_summary(&self, spec: &ExperimentSpec) -> String {
        let mut summary = json!({
            "tool": "rig-lab",
            "version": crate::VERSION,
            "kind": self.kind(),
            "spec": spec,
            "spec_sha256": spec_hash(spec),
            "master_seed": spec.master_seed(),
            "seed_derivation": SEED_DERIVATION,
            "records": self,
        });
        if let ExperimentOutput::DegreeScaling(_) = self {
            summary["note"] = json!(SCALING_NOTE);
        }
        let mut text = serde_json::to_string_pretty(&summary).expect("summary serializes");
        text.push('\n');
        text
    }

    /// Line chart of the main estimate with its confidence band.
    pub fn to_svg(&self) -> String {
        let chart = match self {
            ExperimentOutput::EdgeProb(recs) => LineChart {
                title: "Edge probability: simulation vs exact".into(),
                x_label: "grid index".into(),
                y_label: "P[adjacent]".into(),
                log_x: false,
                series: vec![
                    Series {
                        name: "estimate".into(),
                        points: recs
                            .iter()
                            .map(|r| (r.record.grid_index as f64, r.record.estimate))
                            .collect(),
                        band: recs
                            .iter()
                            .map(|r| (r.record.grid_index as f64, r.record.ci95.0, r.record.ci95.1))
                            .collect(),
                    },
                    Series {
                        name: "q exact".into(),
                        points: recs
                            .iter()
                            .map(|r| (r.record.grid_index as f64, r.q_exact))
                            .collect(),
                        band: vec![],
                    },
                ],
            },
            ExperimentOutput::Connectivity(recs) => {
                let mut series: Vec<Series> = Vec::new();
                for r in recs {
                    let g = &r.record.grid_point;
                    let name = format!("alpha={}", g.alpha.unwrap_or(f64::NAN));
                    if series.last().map(|s| s.name != name).unwrap_or(true) {
                        series.push(Series {
                            name,
                            ..Default::default()
                        });
                    }
                    let s = series.last_mut().expect("pushed above");
                    s.points.push((g.n as f64, r.record.estimate));
                    s.band.push((g.n as f64, r.record.ci95.0, r.record.ci95.1));
                }
                LineChart {
                    title: "Connected fraction along p = (m n^alpha)^(-1/2)".into(),
                    x_label: "n".into(),
                    y_label: "P[connected]".into(),
                    log_x: recs.iter().all(|r| r.record.grid_point.n > 0),
                    series,
                }
            }
            ExperimentOutput::DegreeDist(reps) => {
                let r = &reps[0];
                let pts = |v: &[f64]| v.iter().enumerate().map(|(k, &y)| (k as f64, y)).collect();
                LineChart {
                    title: format!(
                        "Degree law, n={} m={} p={}",
                        r.grid_point.n, r.grid_point.m, r.grid_point.p
                    ),
                    x_label: "degree".into(),
                    y_label: "probability".into(),
                    log_x: false,
                    series: vec![
                        Series {
                            name: "empirical".into(),
                            points: pts(&r.empirical),
                            band: vec![],
                        },
                        Series {
                            name: "exact mixture".into(),
                            points: pts(&r.exact_mixture),
                            band: vec![],
                        },
                        Series {
                            name: "binomial".into(),
                            points: pts(&r.paper_binomial),
                            band: vec![],
                        },
                    ],
                }
            }
            ExperimentOutput::DegreeScaling(recs) => {
                let mut series: Vec<Series> = Vec::new();
                for r in recs {
                    let name = format!("alpha={}", r.alpha);
                    if series.last().map(|s| s.name != name).unwrap_or(true) {
                        series.push(Series {
                            name,
                            ..Default::default()
                        });
                    }
                    let s = series.last_mut().expect("pushed above");
                    s.points.push((r.n as f64, r.ratios.mean));
                    s.band.push((r.n as f64, r.ratios.q05, r.ratios.q95));
                }
                LineChart {
                    title: "X / n^delta: mean with 5-95% band".into(),
                    x_label: "n".into(),
                    y_label: "X / n^delta".into(),
                    log_x: true,
                    series,
                }
            }
        };
        chart.render()
    }
}
