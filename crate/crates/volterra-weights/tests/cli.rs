//! End-to-end tests of the command-line interface: exit codes, report
//! contents, and byte-level determinism of the CSV profiles.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_volterra-weights")
}

fn run_config(dir: &Path, config: &str, out_name: &str) -> Output {
    let config_path = dir.join("job.toml");
    fs::write(&config_path, config).unwrap();
    Command::new(binary())
        .arg("run")
        .arg(&config_path)
        .arg("--out")
        .arg(dir.join(out_name))
        .arg("--quiet")
        .output()
        .expect("binary must run")
}

#[test]
fn hardy_job_reports_the_supremum() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_config(
        dir.path(),
        "kind = \"hardy\"\nv1 = \"x^(-1)\"\nu1 = \"1\"\n",
        "out",
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = fs::read_to_string(dir.path().join("out/report.txt")).unwrap();
    assert!(report.contains("supremum: 1.0"), "report:\n{report}");
    assert!(report.contains("verdict: finite"));
    assert!(dir.path().join("out/profile.csv").exists());
}

#[test]
fn divergent_coefficient_job_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_config(
        dir.path(),
        "kind = \"coefficient\"\nu = \"1\"\nv = \"1\"\na = \"1\"\nk = 0\n",
        "out",
    );
    assert_eq!(out.status.code(), Some(2));
    let report = fs::read_to_string(dir.path().join("out/report.txt")).unwrap();
    assert!(report.contains("verdict: infinite"), "report:\n{report}");
}

#[test]
fn malformed_expression_exits_one_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_config(
        dir.path(),
        "kind = \"hardy\"\nv1 = \"x^^2\"\nu1 = \"1\"\n",
        "out",
    );
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("position"), "stderr: {stderr}");
    assert!(stderr.contains("v1"), "stderr: {stderr}");
}

#[test]
fn identical_configs_produce_identical_csv_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let config = "kind = \"coefficient\"\nu = \"1\"\nv = \"1\"\na = \"x^(-2)\"\nk = 1\n";
    let first = run_config(dir.path(), config, "first");
    let second = run_config(dir.path(), config, "second");
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    let a = fs::read(dir.path().join("first/profile.csv")).unwrap();
    let b = fs::read(dir.path().join("second/profile.csv")).unwrap();
    assert_eq!(a, b, "CSV output must be deterministic");

    // and independent of the worker count
    let config_path = dir.path().join("job.toml");
    let single = Command::new(binary())
        .arg("run")
        .arg(&config_path)
        .arg("--out")
        .arg(dir.path().join("third"))
        .arg("--quiet")
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(single.status.code(), Some(0));
    let c = fs::read(dir.path().join("third/profile.csv")).unwrap();
    assert_eq!(a, c, "CSV output must not depend on the thread count");
}

#[test]
fn dumped_defaults_are_runnable() {
    let dir = tempfile::tempdir().unwrap();
    let dump = Command::new(binary())
        .args(["dump-defaults", "gram"])
        .output()
        .unwrap();
    assert_eq!(dump.status.code(), Some(0));
    let config = String::from_utf8(dump.stdout).unwrap();
    let out = run_config(dir.path(), &config, "out");
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let profile = fs::read_to_string(dir.path().join("out/profile.csv")).unwrap();
    assert!(profile.starts_with("r,rho,sin_theta,ln_det\n"));
}

#[test]
fn unknown_kind_exits_one() {
    let out = Command::new(binary())
        .args(["dump-defaults", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn doubling_job_of_non_member_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_config(dir.path(), "kind = \"doubling\"\nw = \"exp(x)\"\n", "out");
    assert_eq!(out.status.code(), Some(2));
    let report = fs::read_to_string(dir.path().join("out/report.txt")).unwrap();
    assert!(report.contains("member: false"));
    assert!(dir.path().join("out/ratios.csv").exists());
}
