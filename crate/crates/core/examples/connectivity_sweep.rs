//! Connected fraction along p = (m n^alpha)^(-1/2) with m = n, and an SVG
//! chart of the sweep written to the path given as the first argument.
//!
//!     cargo run --release --example connectivity_sweep -- sweep.svg

use rig_lab::montecarlo::{run_experiment, Execution, ExperimentSpec};

fn main() -> rig_lab::Result<()> {
    let spec = ExperimentSpec::from_json(include_str!("specs/connectivity.json"))?;
    let output = run_experiment(&spec, Execution::Parallel)?;
    print!("{}", output.to_csv(&spec));
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, output.to_svg())?;
        eprintln!("chart written to {path}");
    }
    Ok(())
}
