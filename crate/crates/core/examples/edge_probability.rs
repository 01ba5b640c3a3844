//! Monte Carlo adjacency frequency of two vertices against `1 - (1 - p^2)^m`.

use rig_lab::montecarlo::{run_edge_prob, EdgePoint, Execution, ExperimentKind, ExperimentSpec};

fn main() -> rig_lab::Result<()> {
    let spec = ExperimentSpec {
        kind: ExperimentKind::EdgeProb {
            points: vec![
                EdgePoint { m: 1, p: 0.3 },
                EdgePoint { m: 2, p: 0.5 },
                EdgePoint { m: 50, p: 0.02 },
                EdgePoint { m: 100, p: 0.01 },
            ],
        },
        trials: 100_000,
        master_seed: Some(0),
    };
    println!(
        "{:>5} {:>6} {:>10} {:>10} {:>8} {:>6}",
        "m", "p", "estimate", "q_exact", "z", "3se"
    );
    for r in run_edge_prob(&spec, Execution::Parallel)? {
        let point = r.record.grid_point;
        let z = (r.record.estimate - r.q_exact) / r.record.std_error;
        println!(
            "{:>5} {:>6} {:>10.6} {:>10.6} {z:>8.2} {:>6}",
            point.m,
            point.p,
            r.record.estimate,
            r.q_exact,
            if r.within_3se() { "ok" } else { "miss" }
        );
    }
    Ok(())
}
