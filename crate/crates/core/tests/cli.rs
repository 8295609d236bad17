use std::path::Path;
use std::process::{Command, Output};

use csar::harness::{read_csv, CSV_HEADER};

const CONFIG: &str = r#"{
  "schema_version": 1,
  "instance": {"tau": 0.5, "m": 1, "arms": [
    {"reward": {"kind": "point_mass", "value": 0.5}, "cost": {"kind": "point_mass", "value": 0.2}},
    {"reward": {"kind": "point_mass", "value": 0.8}, "cost": {"kind": "point_mass", "value": 0.4}},
    {"reward": {"kind": "point_mass", "value": 0.99}, "cost": {"kind": "point_mass", "value": 0.9}}
  ]},
  "algorithms": ["csar", "successive_saa", "uniform_top_m"],
  "horizons": [100, 300],
  "trials": 50,
  "master_seed": 11,
  "zeta_monitor": true
}"#;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csar-experiment"))
        .args(args)
        .output()
        .expect("spawn csar-experiment")
}

fn write_config(dir: &Path, text: &str) -> String {
    let path = dir.join("config.json");
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn writes_csv_to_stdout_without_out() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let out = cli(&["--config", &cfg]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert_eq!(lines.count(), 6);
    // Per-cell summary lines go to stderr.
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 6);
}

#[test]
fn overrides_filter_and_replace() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let csv = dir.path().join("out.csv");
    let out = cli(&[
        "--config",
        &cfg,
        "--out",
        csv.to_str().unwrap(),
        "--trials",
        "7",
        "--seed",
        "99",
        "--algo",
        "csar,uniform_top_m",
        "--horizons",
        "30,60,90",
        "--threads",
        "2",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let rows = read_csv(&csv).unwrap();
    let cells: Vec<_> = rows
        .iter()
        .map(|r| (r.algorithm.name(), r.horizon, r.trials))
        .collect();
    assert_eq!(
        cells,
        vec![
            ("csar", 30, 7),
            ("csar", 60, 7),
            ("csar", 90, 7),
            ("uniform_top_m", 30, 7),
            ("uniform_top_m", 60, 7),
            ("uniform_top_m", 90, 7),
        ]
    );
    assert!(rows.iter().all(|r| r.incorrect_count == 0));
}

#[test]
fn seed_override_changes_nothing_on_point_masses_but_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let a = cli(&["--config", &cfg, "--seed", "1"]);
    let b = cli(&["--config", &cfg, "--seed", "2"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn traces_flag_writes_one_file_per_trial() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let traces = dir.path().join("traces");
    let out = cli(&[
        "--config",
        &cfg,
        "--algo",
        "csar",
        "--horizons",
        "100",
        "--trials",
        "4",
        "--traces",
        traces.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut names: Vec<_> = std::fs::read_dir(&traces)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 4);
    assert_eq!(names[0], "csar_h100_trial000000.json");
    let trace: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(traces.join(&names[0])).unwrap()).unwrap();
    assert_eq!(trace["selections"], serde_json::json!([1]));
}

#[test]
fn invalid_horizon_exits_nonzero_with_field_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let out = cli(&["--config", &cfg, "--horizons", "100,2"]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("horizons[1]"), "{msg}");
}

#[test]
fn missing_config_and_unknown_algo_fail() {
    let out = cli(&["--config", "/nonexistent/config.json"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent/config.json"));

    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let out = cli(&["--config", &cfg, "--algo", "thompson"]);
    assert!(!out.status.success());
}

#[test]
fn unwritable_out_reports_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), CONFIG);
    let bad = dir.path().join("missing-dir").join("x.csv");
    let out = cli(&["--config", &cfg, "--out", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing-dir"));
}

#[test]
fn shipped_config_parses_and_validates() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/six_arm_bernoulli.json");
    let cfg = csar::harness::ExperimentConfig::load(&path).unwrap();
    let v = cfg.validate().unwrap();
    assert_eq!(v.profile.top_m_sorted(), vec![0, 1]);
    assert!((v.profile.delta_min - 0.025).abs() < 1e-12);
}
