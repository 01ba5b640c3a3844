//! Runs any experiment spec from a JSON file and writes the CSV table and
//! JSON summary next to each other.
//!
//!     cargo run --release --example run_spec -- crates/core/examples/specs/degree_dist.json out/

use std::path::PathBuf;

use rig_lab::montecarlo::{run_experiment, Execution, ExperimentSpec};

fn main() -> rig_lab::Result<()> {
    let mut args = std::env::args().skip(1);
    let Some(spec_path) = args.next() else {
        eprintln!("usage: run_spec SPEC.json [OUT_DIR]");
        std::process::exit(2);
    };
    let out_dir = PathBuf::from(args.next().unwrap_or_else(|| ".".into()));

    let spec = ExperimentSpec::from_json(&std::fs::read_to_string(&spec_path)?)?;
    let output = run_experiment(&spec, Execution::Parallel)?;
    std::fs::create_dir_all(&out_dir)?;
    std::fs::write(out_dir.join("results.csv"), output.to_csv(&spec))?;
    std::fs::write(out_dir.join("summary.json"), output.to_json_summary(&spec))?;
    println!("{} results written to {}", output.kind(), out_dir.display());
    Ok(())
}
