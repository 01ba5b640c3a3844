//! Degree of vertex 0 scaled by n^delta, delta = 1 - alpha, against the
//! envelope [a_lower(c), a_upper(c)] as n grows.
//!
//!     cargo run --release --example degree_scaling

use rig_lab::montecarlo::{run_degree_scaling, Execution, ExperimentKind, ExperimentSpec, MRule};

fn main() -> rig_lab::Result<()> {
    let spec = ExperimentSpec {
        kind: ExperimentKind::DegreeScaling {
            n: vec![100, 1000, 10_000],
            alpha: vec![0.5],
            m_rule: MRule::Equal,
            c: 0.5,
        },
        trials: 300,
        master_seed: Some(0),
    };
    for r in run_degree_scaling(&spec, Execution::Parallel)? {
        let (lo, hi) = r.envelope;
        println!(
            "n = {:>6}: mean ratio {:.4} (5%..95%: {:.3}..{:.3}) envelope [{lo:.4}, {hi:.4}]",
            r.n, r.ratios.mean, r.ratios.q05, r.ratios.q95
        );
        println!(
            "           above upper {:.4} (bound {:.2e}), below lower {:.4} (bound {:.2e})",
            r.exceed_upper_freq, r.chernoff_upper, r.exceed_lower_freq, r.chernoff_lower
        );
    }
    Ok(())
}
