//! Command-line front end behind the `rig-lab` binary.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analytics::{
    q_approx, q_exact, rate_h, solve_a, tail_bound, threshold_p, zeta_bound, Branch,
    TailBoundQuery, TailDirection,
};
use crate::model::{
    project, sample_assignment, write_assignment, write_edge_list, EdgeListHeader, ModelParams,
};
use crate::montecarlo::{
    run_experiment, DegreePoint, Execution, ExperimentKind, ExperimentSpec, MRule,
};
use crate::{Error, Result};

/// Environment variable supplying the default seed.
pub const SEED_ENV: &str = "RIG_LAB_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "rig-lab",
    version,
    about = "Random intersection graph laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample G(n, m, p) and write its edge list or assignment.
    Gen(GenArgs),
    /// Evaluate one closed-form quantity.
    Probe(ProbeArgs),
    /// Run an edge-probability or connectivity-sweep experiment.
    Sweep(ExperimentArgs),
    /// Compare the empirical degree law with the analytic laws.
    DegreeDist(ExperimentArgs),
    /// Degree scaling X / n^delta against the envelope roots.
    DegreeScaling(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Edgelist,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Edges,
    Assignment,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
    /// What the edgelist format writes.
    #[arg(long, value_enum, default_value = "edges")]
    emit: Emit,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the assignment (`v: w1 w2 ...`) to this file.
    #[arg(long)]
    assignment_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    QExact,
    QApprox,
    Zeta,
    #[value(name = "H", alias = "h")]
    H,
    TailBound,
    ARoot,
    ThresholdP,
}

#[derive(Debug, Args)]
struct ProbeArgs {
    #[arg(value_enum)]
    quantity: Quantity,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    p: Option<f64>,
    /// Argument of H; `inf` is accepted.
    #[arg(long)]
    t: Option<f64>,
    /// Tail cutoff.
    #[arg(long)]
    k: Option<f64>,
    #[arg(long, value_parser = ["upper", "lower"])]
    direction: Option<String>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, value_parser = ["upper", "lower"])]
    branch: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    /// JSON experiment spec; a built-in default grid is used when absent.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory for results.csv and summary.json; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Stdout format when --out is absent.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Also write chart.svg into --out.
    #[arg(long)]
    svg: bool,
    /// Overrides the spec's master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the spec's trial count.
    #[arg(long)]
    trials: Option<u64>,
    /// Run trials on one thread (output is identical either way).
    #[arg(long)]
    sequential: bool,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reads the default seed from `RIG_LAB_SEED`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(SEED_ENV).ok(), stdout, stderr)
}

/// [`run`] with the seed environment variable passed explicitly.
pub fn run_with_env<I, T>(
    args: I,
    env_seed: Option<String>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli, env_seed, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "rig-lab: {e}");
            match e {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn env_seed_value(env_seed: Option<String>) -> Result<Option<u64>> {
    env_seed
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::argument(format!("{SEED_ENV} must be a u64, got {s:?}")))
        })
        .transpose()
}

fn dispatch(cli: Cli, env_seed: Option<String>, stdout: &mut dyn Write) -> Result<()> {
    let env_seed = env_seed_value(env_seed)?;
    match cli.command {
        Command::Gen(args) => cmd_gen(args, env_seed, stdout),
        Command::Probe(args) => cmd_probe(args, stdout),
        Command::Sweep(args) => cmd_experiment(args, ExperimentCommand::Sweep, env_seed, stdout),
        Command::DegreeDist(args) => {
            cmd_experiment(args, ExperimentCommand::DegreeDist, env_seed, stdout)
        }
        Command::DegreeScaling(args) => {
            cmd_experiment(args, ExperimentCommand::DegreeScaling, env_seed, stdout)
        }
    }
}

fn with_path(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(with_path(path))
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => write_file(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_gen(args: GenArgs, env_seed: Option<u64>, stdout: &mut dyn Write) -> Result<()> {
    let params = ModelParams::new(args.n, args.m, args.p)?;
    let seed = args.seed.or(env_seed).unwrap_or(0);
    let assignment = sample_assignment(&params, seed);
    let graph = project(&assignment);
    let text = match args.format {
        Format::Edgelist => match args.emit {
            Emit::Edges => write_edge_list(&graph, &EdgeListHeader { params, seed }),
            Emit::Assignment => write_assignment(&assignment, seed),
        },
        Format::Csv => {
            let mut text = format!(
                "# rig n={} m={} p={} seed={}\ni,j\n",
                params.n(),
                params.m(),
                params.p(),
                seed
            );
            for (i, j) in graph.edges() {
                text.push_str(&format!("{i},{j}\n"));
            }
            text
        }
        Format::Json => {
            let value = serde_json::json!({
                "tool": "rig-lab",
                "version": crate::VERSION,
                "params": params,
                "seed": seed,
                "assignment": assignment.sets(),
                "edges": graph.edges(),
            });
            let mut text = serde_json::to_string_pretty(&value).expect("serializes");
            text.push('\n');
            text
        }
        Format::Svg => return Err(Error::argument("gen does not support --format svg")),
    };
    if let Some(path) = &args.assignment_out {
        write_file(path, &write_assignment(&assignment, seed))?;
    }
    emit(args.out.as_deref(), &text, stdout)
}

/// Rounds to 16 significant digits (15 after the leading one) and prints the
/// shortest decimal that round-trips that value.
pub fn format_probe_value(x: f64) -> String {
    let rounded: f64 = format!("{x:.15e}").parse().expect("formatted float parses");
    rounded.to_string()
}

fn need<T>(value: Option<T>, flag: &str, quantity: &str) -> Result<T> {
    value.ok_or_else(|| Error::argument(format!("{quantity} requires --{flag}")))
}

fn cmd_probe(args: ProbeArgs, stdout: &mut dyn Write) -> Result<()> {
    let name = args
        .quantity
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let name = name.as_str();
    let value = match args.quantity {
        Quantity::QExact => q_exact(need(args.m, "m", name)?, need(args.p, "p", name)?)?,
        Quantity::QApprox | Quantity::Zeta => {
            let (m, p) = (need(args.m, "m", name)?, need(args.p, "p", name)?);
            q_exact(m, p)?;
            if args.quantity == Quantity::QApprox {
                q_approx(m, p)
            } else {
                zeta_bound(m, p)
            }
        }
        Quantity::H => rate_h(need(args.t, "t", name)?)?,
        Quantity::TailBound => {
            let direction: TailDirection = need(args.direction, "direction", name)?.parse()?;
            let query = TailBoundQuery::new(
                need(args.n, "n", name)?,
                need(args.p, "p", name)?,
                need(args.k, "k", name)?,
                direction,
            )?;
            tail_bound(&query)
        }
        Quantity::ARoot => {
            let branch: Branch = need(args.branch, "branch", name)?.parse()?;
            solve_a(need(args.c, "c", name)?, branch)?.a
        }
        Quantity::ThresholdP => {
            let alpha = need(args.alpha, "alpha", name)?;
            if !alpha.is_finite() {
                return Err(Error::argument(format!(
                    "alpha must be finite, got {alpha}"
                )));
            }
            let m = need(args.m, "m", name)?;
            let n = need(args.n, "n", name)?;
            if m == 0 || n == 0 {
                return Err(Error::argument("threshold-p requires m >= 1 and n >= 1"));
            }
            threshold_p(alpha, m, n as usize)
        }
    };
    writeln!(stdout, "{}", format_probe_value(value))?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ExperimentCommand {
    Sweep,
    DegreeDist,
    DegreeScaling,
}

impl ExperimentCommand {
    fn accepts(&self, kind: &ExperimentKind) -> bool {
        matches!(
            (self, kind),
            (
                ExperimentCommand::Sweep,
                ExperimentKind::EdgeProb { .. } | ExperimentKind::ConnectivitySweep { .. }
            ) | (
                ExperimentCommand::DegreeDist,
                ExperimentKind::DegreeDist { .. }
            ) | (
                ExperimentCommand::DegreeScaling,
                ExperimentKind::DegreeScaling { .. }
            )
        )
    }

    fn default_spec(&self) -> ExperimentSpec {
        let kind = match self {
            ExperimentCommand::Sweep => ExperimentKind::ConnectivitySweep {
                n: vec![100, 400, 1600],
                alpha: vec![1.0, 1.5, 1.9, 2.1, 2.5, 3.0],
                m_rule: MRule::Equal,
            },
            ExperimentCommand::DegreeDist => ExperimentKind::DegreeDist {
                points: vec![
                    DegreePoint { n: 4, m: 2, p: 0.5 },
                    DegreePoint {
                        n: 50,
                        m: 20,
                        p: 0.1,
                    },
                ],
            },
            ExperimentCommand::DegreeScaling => ExperimentKind::DegreeScaling {
                n: vec![100, 1000, 10_000],
                alpha: vec![0.5],
                m_rule: MRule::Equal,
                c: 0.5,
            },
        };
        let trials = match self {
            ExperimentCommand::Sweep => 200,
            ExperimentCommand::DegreeDist => 100_000,
            ExperimentCommand::DegreeScaling => 1000,
        };
        ExperimentSpec {
            kind,
            trials,
            master_seed: None,
        }
    }
}

fn cmd_experiment(
    args: ExperimentArgs,
    command: ExperimentCommand,
    env_seed: Option<u64>,
    stdout: &mut dyn Write,
) -> Result<()> {
    let mut spec = match &args.config {
        Some(path) => {
            ExperimentSpec::from_json(&fs::read_to_string(path).map_err(with_path(path))?)?
        }
        None => command.default_spec(),
    };
    if !command.accepts(&spec.kind) {
        return Err(Error::argument(format!(
            "spec kind {} cannot be run by this subcommand",
            spec.kind.name()
        )));
    }
    if let Some(trials) = args.trials {
        spec.trials = trials;
    }
    spec.master_seed = Some(args.seed.or(spec.master_seed).or(env_seed).unwrap_or(0));
    spec.validate()?;
    if args.out.is_none() && args.format == Format::Edgelist {
        return Err(Error::argument(
            "experiments write csv, json or svg, not edgelist",
        ));
    }

    let execution = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let output = run_experiment(&spec, execution)?;
    match &args.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(with_path(dir))?;
            write_file(&dir.join("results.csv"), &output.to_csv(&spec))?;
            write_file(&dir.join("summary.json"), &output.to_json_summary(&spec))?;
            if args.svg || args.format == Format::Svg {
                write_file(&dir.join("chart.svg"), &output.to_svg())?;
            }
            Ok(())
        }
        None => {
            let text = match args.format {
                Format::Csv => output.to_csv(&spec),
                Format::Json => output.to_json_summary(&spec),
                Format::Svg => output.to_svg(),
                Format::Edgelist => unreachable!("rejected above"),
            };
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
