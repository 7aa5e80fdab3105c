//! End-to-end tests of the `padmm` binary: exit codes and artifacts.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use padmm::bench::io::{parse_trace_csv, TRACE_HEADER};
use serde_json::Value;

fn padmm(args: &[&str], workers: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_padmm"));
    cmd.args(args);
    match workers {
        Some(w) => cmd.env("PADMM_WORKERS", w),
        None => cmd.env_remove("PADMM_WORKERS"),
    };
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

/// Writes a config for the scalar instance and returns its path.
fn scalar_config(dir: &Path, beta: &str, max_iters: usize) -> PathBuf {
    let text = format!(
        r#"{{"instance": {{"generator": {{"family": "quad-quad", "n": 1, "p": 1, "l": 1, "seed": 0}}}},
            "solver": {{"theta": 1.0, "beta": {beta}, "tau": 0.0, "rho": 1e-8, "max_iters": {max_iters}}},
            "start": {{"x0": [0], "y0": [1], "lambda0": [1]}},
            "outputs": {{"trace": {:?}, "certificate": {:?}, "report": {:?}}}}}"#,
        path_str(&dir.join("trace.csv")),
        path_str(&dir.join("cert.json")),
        path_str(&dir.join("report.json")),
    );
    let path = dir.join("scalar.json");
    std::fs::write(&path, text).unwrap();
    path
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn run_writes_artifacts_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = scalar_config(dir.path(), "4", 10_000);
    let out = padmm(&["run", path_str(&cfg)], None);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let trace = std::fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    assert!(trace.starts_with(TRACE_HEADER));
    let rows = parse_trace_csv(&trace).unwrap();
    assert_eq!(rows[0].k, 0);
    assert!((rows[1].res_primal - 0.08).abs() < 1e-12);
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["exit_code"], 0);
    assert_eq!(report["status"], "success");
    let cert = read_json(&dir.path().join("cert.json"));
    assert_eq!(cert["failures"].as_array().unwrap().len(), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("exit=0"));
}

#[test]
fn exit_codes_for_cap_and_configuration_errors() {
    let dir = tempfile::tempdir().unwrap();
    let capped = scalar_config(dir.path(), "4", 3);
    assert_eq!(code(&padmm(&["run", path_str(&capped)], None)), 3);

    let inadmissible = scalar_config(dir.path(), "1", 100);
    let out = padmm(&["run", path_str(&inadmissible)], None);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("delta1"));
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["exit_code"], 4);

    assert_eq!(code(&padmm(&["run", "/nonexistent/config.json"], None)), 4);
    assert_eq!(code(&padmm(&["frobnicate"], None)), 4);
    assert_eq!(code(&padmm(&["--help"], None)), 0);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"instance": {"generator": {"family": "quad-quad"}}}"#).unwrap();
    assert_eq!(code(&padmm(&["run", path_str(&bad)], None)), 4);
}

#[test]
fn certify_accepts_matching_trace_and_rejects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = scalar_config(dir.path(), "4", 10_000);
    assert_eq!(code(&padmm(&["run", path_str(&cfg)], None)), 0);
    let trace = dir.path().join("trace.csv");
    let out = padmm(&["certify", path_str(&trace), path_str(&cfg)], None);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let text = std::fs::read_to_string(&trace).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    // raise the merit of row k = 3
    let mut fields: Vec<String> = lines[4].split(',').map(String::from).collect();
    let merit: f64 = fields[7].parse().unwrap();
    fields[7] = format!("{:.16e}", merit + 1.0);
    lines[4] = fields.join(",");
    let tampered = dir.path().join("tampered.csv");
    std::fs::write(&tampered, lines.join("\n") + "\n").unwrap();
    let out = padmm(&["certify", path_str(&tampered), path_str(&cfg)], None);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("mismatch"));
}

#[test]
fn gen_output_feeds_a_file_instance() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.json");
    let out = padmm(
        &["gen", "box-cos", "--n", "3", "--p", "4", "--l", "5", "--seed", "11", "--out", path_str(&inst), "--param", "a=1.5"],
        None,
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let json = read_json(&inst);
    assert_eq!(json["g"]["a"], 1.5);

    let cfg = dir.path().join("run.json");
    std::fs::write(
        &cfg,
        format!(
            r#"{{"instance": {{"file": {:?}}}, "solver": {{"theta": 1.3, "G": {{"kind": "linearized"}}, "max_iters": 300}},
                "outputs": {{"report": {:?}}}}}"#,
            path_str(&inst),
            path_str(&dir.path().join("report.json"))
        ),
    )
    .unwrap();
    let status = code(&padmm(&["run", path_str(&cfg)], None));
    assert!(status == 0 || status == 3, "exit {status}");
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["certificate"]["checks_failed"], 0);

    assert_eq!(code(&padmm(&["gen", "nope", "--n", "1", "--p", "1", "--l", "1", "--seed", "0", "--out", path_str(&inst)], None)), 4);
    assert_eq!(
        code(&padmm(&["gen", "l0-ls", "--n", "1", "--p", "1", "--l", "1", "--seed", "0", "--out", path_str(&inst), "--param", "bogus=1"], None)),
        4
    );
}

#[test]
fn single_theta_sweep_matches_run() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("base.json");
    std::fs::write(
        &cfg,
        format!(
            r#"{{"instance": {{"generator": {{"family": "quad-quad", "n": 4, "p": 4, "l": 5, "seed": 8}}}},
                "solver": {{"theta": 1.618, "beta": "auto", "rho": 1e-7, "max_iters": 50000}},
                "start": "consistent-multiplier",
                "outputs": {{"trace": {:?}}}}}"#,
            path_str(&dir.path().join("t.csv"))
        ),
    )
    .unwrap();
    assert_eq!(code(&padmm(&["run", path_str(&cfg)], None)), 0);
    let table = dir.path().join("sweep.csv");
    let out = padmm(&["sweep", path_str(&cfg), "--theta", "1.618", "--out", path_str(&table)], Some("2"));
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let direct = std::fs::read(dir.path().join("t.csv")).unwrap();
    let swept = std::fs::read(dir.path().join("t_theta1.618.csv")).unwrap();
    assert_eq!(direct, swept);
    let rows = std::fs::read_to_string(&table).unwrap();
    assert_eq!(rows.lines().count(), 2);

    let multi = padmm(&["sweep", path_str(&cfg), "--theta", "0.5,1.9,2.4"], Some("3"));
    assert_eq!(code(&multi), 4, "theta 2.4 is outside (0, 2)");
    let stdout = String::from_utf8_lossy(&multi.stdout);
    assert_eq!(stdout.lines().count(), 4);

    assert_eq!(code(&padmm(&["sweep", path_str(&cfg), "--theta", "1.0"], Some("0"))), 4);
}
