//! Degree of a fixed vertex: sampled frequencies next to the exact mixture
//! law and the plain binomial law `Bi(n - 1, mp^2)`.

use rig_lab::analytics::{degree_pmf, DegreeLawKind};
use rig_lab::montecarlo::{
    run_degree_dist, DegreePoint, Execution, ExperimentKind, ExperimentSpec,
};

fn main() -> rig_lab::Result<()> {
    let exact = degree_pmf(4, 2, 0.5, DegreeLawKind::ExactMixture)?;
    println!("exact mixture law at (4, 2, 0.5): {:?}", exact.pmf);
    println!("  (enumerating all 256 outcomes gives 81, 57, 75, 43 out of 256)\n");

    let spec = ExperimentSpec {
        kind: ExperimentKind::DegreeDist {
            points: vec![
                DegreePoint { n: 4, m: 2, p: 0.5 },
                DegreePoint {
                    n: 50,
                    m: 20,
                    p: 0.1,
                },
            ],
        },
        trials: 100_000,
        master_seed: Some(0),
    };
    for report in run_degree_dist(&spec, Execution::Parallel)? {
        let g = report.grid_point;
        println!("(n, m, p) = ({}, {}, {})", g.n, g.m, g.p);
        println!(
            "  mean degree {:.4}, expected {:.4}",
            report.mean_degree, report.expected_degree
        );
        println!("  TV to exact mixture {:.5}", report.tv_exact_mixture);
        println!("  TV to binomial      {:.5}", report.tv_paper_binomial);
        println!(
            "  {:>3} {:>9} {:>9} {:>9}",
            "d", "sampled", "mixture", "binomial"
        );
        for d in 0..report.empirical.len().min(12) {
            println!(
                "  {d:>3} {:>9.5} {:>9.5} {:>9.5}",
                report.empirical[d], report.exact_mixture[d], report.paper_binomial[d]
            );
        }
    }
    Ok(())
}
