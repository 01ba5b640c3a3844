use std::fs;

use rig_lab::cli::{run_with_env, EXIT_IO, EXIT_OK, EXIT_USAGE};
use rig_lab::model::{parse_assignment, parse_edge_list, project};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn rig(args: &[&str]) -> Outcome {
    rig_env(args, None)
}

fn rig_env(args: &[&str], env_seed: Option<&str>) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("rig-lab").chain(args.iter().copied());
    let code = run_with_env(argv, env_seed.map(String::from), &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn data_lines(text: &str) -> Vec<&str> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .collect()
}

#[test]
fn gen_without_attachments_has_no_edges() {
    let out = rig(&["gen", "--n", "5", "--m", "3", "--p", "0", "--seed", "1"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with("# rig n=5 m=3 p=0 seed=1\n"));
    assert!(data_lines(&out.stdout).is_empty());
}

#[test]
fn gen_full_attachment_is_complete() {
    let out = rig(&["gen", "--n", "4", "--m", "2", "--p", "1"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(data_lines(&out.stdout).len(), 6);
}

#[test]
fn gen_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = ["a.txt", "b.txt"]
        .iter()
        .map(|f| dir.path().join(f))
        .collect();
    for path in &paths {
        let out = rig(&[
            "gen",
            "--n",
            "60",
            "--m",
            "40",
            "--p",
            "0.08",
            "--seed",
            "9",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    }
    let (a, b) = (fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn gen_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let assignment_path = dir.path().join("assignment.txt");
    let out = rig(&[
        "gen",
        "--n",
        "40",
        "--m",
        "25",
        "--p",
        "0.1",
        "--seed",
        "3",
        "--assignment-out",
        assignment_path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_OK);
    let (header, graph) = parse_edge_list(&out.stdout).unwrap();
    assert_eq!(
        (header.params.n(), header.params.m(), header.seed),
        (40, 25, 3)
    );
    let (_, assignment) = parse_assignment(&fs::read_to_string(&assignment_path).unwrap()).unwrap();
    assert_eq!(project(&assignment), graph);
}

#[test]
fn gen_json_and_csv() {
    let json = rig(&[
        "gen", "--n", "4", "--m", "2", "--p", "1", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(value["edges"].as_array().unwrap().len(), 6);
    assert_eq!(value["seed"], 0);
    let csv = rig(&["gen", "--n", "3", "--m", "1", "--p", "1", "--format", "csv"]);
    assert_eq!(data_lines(&csv.stdout), ["i,j", "0,1", "0,2", "1,2"]);
}

#[test]
fn gen_rejects_invalid_params() {
    for args in [
        &["gen", "--n", "5", "--m", "3", "--p", "1.5"][..],
        &["gen", "--n", "0", "--m", "3", "--p", "0.5"],
        &["gen", "--n", "5", "--m", "3"],
        &[
            "gen", "--n", "5", "--m", "3", "--p", "0.5", "--format", "xml",
        ],
        &["frobnicate"],
    ] {
        let out = rig(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn probe_examples() {
    let cases: [(&[&str], &str); 6] = [
        (
            &["probe", "a-root", "--c", "1", "--branch", "upper"],
            "2.718281828459045",
        ),
        (&["probe", "H", "--t", "1"], "0"),
        (
            &[
                "probe",
                "threshold-p",
                "--alpha",
                "2",
                "--m",
                "4",
                "--n",
                "10",
            ],
            "0.05",
        ),
        (&["probe", "q-exact", "--m", "2", "--p", "0.5"], "0.4375"),
        (&["probe", "q-approx", "--m", "2", "--p", "0.5"], "0.5"),
        (&["probe", "zeta", "--m", "2", "--p", "0.5"], "0.0625"),
    ];
    for (args, expected) in cases {
        let out = rig(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
        assert_eq!(out.stdout.trim(), expected, "{args:?}");
    }
    let out = rig(&[
        "probe",
        "tail-bound",
        "--n",
        "10",
        "--p",
        "0.5",
        "--k",
        "10",
        "--direction",
        "upper",
    ]);
    let value: f64 = out.stdout.trim().parse().unwrap();
    assert!((value - 0.144_935).abs() < 1e-6);
}

#[test]
fn probe_domain_errors_name_the_precondition() {
    let out = rig(&[
        "probe",
        "tail-bound",
        "--n",
        "10",
        "--p",
        "0.5",
        "--k",
        "2",
        "--direction",
        "upper",
    ]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("k >= np"), "{}", out.stderr);
    let out = rig(&["probe", "a-root", "--c", "1.5", "--branch", "lower"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = rig(&["probe", "q-exact", "--m", "2"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("--p"));
}

#[test]
fn empty_grid_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("empty.json");
    fs::write(
        &config,
        r#"{"kind":"connectivity-sweep","n":[],"alpha":[2.0],"trials":5}"#,
    )
    .unwrap();
    let out = rig(&["sweep", "--config", config.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(
        out.stderr.contains("empty parameter grid"),
        "{}",
        out.stderr
    );
}

#[test]
fn io_failures_exit_3() {
    let out = rig(&["sweep", "--config", "/nonexistent/spec.json"]);
    assert_eq!(out.code, EXIT_IO);
    assert!(out.stderr.contains("/nonexistent/spec.json"));

    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "").unwrap();
    let out = rig(&[
        "gen",
        "--n",
        "3",
        "--m",
        "1",
        "--p",
        "1",
        "--out",
        blocker.join("x").to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_IO);
}

#[test]
fn malformed_and_mismatched_specs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("spec.json");
    fs::write(&config, "{ not json").unwrap();
    assert_eq!(
        rig(&["sweep", "--config", config.to_str().unwrap()]).code,
        EXIT_USAGE
    );
    fs::write(
        &config,
        r#"{"kind":"degree-dist","points":[{"n":4,"m":2,"p":0.5}],"trials":10}"#,
    )
    .unwrap();
    let out = rig(&["sweep", "--config", config.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("degree-dist"));
}

#[test]
fn connectivity_sweep_writes_rows_with_trend() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    fs::write(
        &config,
        r#"{"kind":"connectivity-sweep","n":[50,100,200],"alpha":[1.8,2.0,2.2],"trials":40,"master_seed":5}"#,
    )
    .unwrap();
    let out_dir = dir.path().join("out");
    let out = rig(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
        "--svg",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let csv = fs::read_to_string(out_dir.join("results.csv")).unwrap();
    let provenance: Vec<_> = csv.lines().take_while(|l| l.starts_with('#')).collect();
    assert_eq!(provenance.len(), 2);
    assert!(provenance[1].contains("master_seed=5"));
    assert!(provenance[1].contains("spec_sha256="));
    let rows = data_lines(&csv);
    let header: Vec<_> = rows[0].split(',').collect();
    let trend = header
        .iter()
        .position(|c| *c == "trend")
        .expect("trend column");
    assert_eq!(rows.len(), 1 + 9);
    for row in &rows[1..] {
        let fields: Vec<_> = row.split(',').collect();
        assert_eq!(fields.len(), header.len());
        assert!(
            ["start", "up", "flat", "down"].contains(&fields[trend]),
            "{row}"
        );
    }
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["records"].as_array().unwrap().len(), 9);
    assert!(fs::read_to_string(out_dir.join("chart.svg"))
        .unwrap()
        .starts_with("<svg"));
}

#[test]
fn degree_dist_summary_reports_small_mixture_tv() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("dd.json");
    fs::write(
        &config,
        r#"{"kind":"degree-dist","points":[{"n":4,"m":2,"p":0.5}],"trials":100000,"master_seed":1}"#,
    )
    .unwrap();
    let out = rig(&[
        "degree-dist",
        "--config",
        config.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let summary: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let record = &summary["records"][0];
    assert!(record["tv_exact_mixture"].as_f64().unwrap() < 0.01);
    assert!(record["tv_paper_binomial"].as_f64().unwrap() > 0.05);
}

#[test]
fn seed_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("edge.json");
    let write = |seed: &str| {
        fs::write(
            &config,
            format!(r#"{{"kind":"edge-prob","points":[{{"m":2,"p":0.5}}],"trials":50{seed}}}"#),
        )
        .unwrap();
    };
    let seed_of = |out: &Outcome| -> u64 {
        let summary: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        summary["master_seed"].as_u64().unwrap()
    };
    let cfg = config.to_str().unwrap();
    write("");
    let args = ["sweep", "--config", cfg, "--format", "json"];
    assert_eq!(seed_of(&rig(&args)), 0);
    assert_eq!(seed_of(&rig_env(&args, Some("17"))), 17);
    write(r#","master_seed":8"#);
    assert_eq!(seed_of(&rig_env(&args, Some("17"))), 8);
    let with_flag = ["sweep", "--config", cfg, "--format", "json", "--seed", "3"];
    assert_eq!(seed_of(&rig_env(&with_flag, Some("17"))), 3);
    assert_eq!(rig_env(&args, Some("not-a-number")).code, EXIT_USAGE);

    let a = rig_env(&["gen", "--n", "30", "--m", "20", "--p", "0.2"], Some("4"));
    let b = rig(&["gen", "--n", "30", "--m", "20", "--p", "0.2", "--seed", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn experiment_output_is_stable_across_parallelism() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("scaling.json");
    fs::write(
        &config,
        r#"{"kind":"degree-scaling","n":[100,300],"alpha":[0.5],"c":0.5,"trials":100,"master_seed":2}"#,
    )
    .unwrap();
    let cfg = config.to_str().unwrap();
    let parallel = rig(&["degree-scaling", "--config", cfg]);
    let sequential = rig(&["degree-scaling", "--config", cfg, "--sequential"]);
    assert_eq!(parallel.code, EXIT_OK, "{}", parallel.stderr);
    assert_eq!(parallel.stdout, sequential.stdout);
}

#[test]
fn help_and_version_exit_0() {
    let out = rig(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("degree-scaling"));
    assert_eq!(rig(&["--version"]).code, EXIT_OK);
}
