//! End-to-end smoke tests driving the compiled `unimod` binary: argument
//! handling, exit codes, and the files each subcommand leaves behind.

use std::path::Path;
use std::process::{Command, Output};

fn unimod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unimod"))
        .args(args)
        .output()
        .expect("the binary should spawn")
}

fn design_args<'a>(dir: &'a Path, extra: &[&'a str]) -> Vec<String> {
    let mut args: Vec<String> = [
        "design",
        "--algo",
        "fbmm",
        "--n",
        "16",
        "--init",
        "random",
        "--seed",
        "11",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    args.push("--trace".to_string());
    args.push(dir.join("trace.csv").display().to_string());
    args.push("--summary".to_string());
    args.push(dir.join("summary.json").display().to_string());
    args.push("--dump-autocorr".to_string());
    args.push(dir.join("autocorr.csv").display().to_string());
    args.extend(extra.iter().map(|s| s.to_string()));
    args
}

fn run(args: &[String]) -> Output {
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    unimod(&refs)
}

#[test]
fn missing_required_arguments_exit_with_code_two() {
    let output = unimod(&["design", "--algo", "fbmm"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("--n"), "stderr was: {stderr}");
}

#[test]
fn unknown_algorithm_exits_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = design_args(dir.path(), &[]);
    args[2] = "gradient-descent".to_string();
    assert_eq!(run(&args).status.code(), Some(2));
}

#[test]
fn design_writes_all_requested_files() {
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("seq.csv");
    let args = design_args(
        dir.path(),
        &["--dump-sequence", seq.to_str().unwrap()],
    );
    let output = run(&args);
    assert_eq!(output.status.code(), Some(0));

    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("algo=fbmm n=16 init=random seed=11"));
    assert!(stdout.contains("terminated=converged"));

    let trace = std::fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    assert!(trace.starts_with("iter,isl,psl,elapsed_ms\n0,"));
    let autocorr = std::fs::read_to_string(dir.path().join("autocorr.csv")).unwrap();
    assert!(autocorr.starts_with("lag,magnitude_db\n"));
    assert_eq!(autocorr.lines().count(), 17); // header + lags 0..15
    let sequence = std::fs::read_to_string(&seq).unwrap();
    assert_eq!(sequence.lines().count(), 17); // header + 16 entries
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("summary.json")).unwrap())
            .unwrap();
    assert_eq!(summary["algorithm"], "fbmm");
    assert_eq!(summary["seed"], 11);
}

#[test]
fn invalid_spec_exits_with_code_two_before_writing() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = design_args(dir.path(), &[]);
    // Frank at a non-square length is caught during validation.
    args[6] = "frank".to_string();
    args[4] = "5".to_string();
    let output = run(&args);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("perfect-square"));
    assert!(!dir.path().join("trace.csv").exists());
}

#[test]
fn unwritable_output_exits_with_code_three() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = design_args(dir.path(), &[]);
    let bad = dir.path().join("missing-dir").join("trace.csv");
    args[10] = bad.display().to_string();
    let output = run(&args);
    assert_eq!(output.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&output.stderr).contains("failed to write"));
}

#[test]
fn bench_writes_one_row_per_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.csv");
    let output = unimod(&[
        "bench",
        "--lengths",
        "16",
        "--runs",
        "1",
        "--tol",
        "1e-3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let table = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "algorithm,n,avg_sweep_ms,avg_total_ms,avg_iterations");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("fbmm,16,"));
    assert!(lines[2].starts_with("misl,16,"));
    assert!(lines[3].starts_with("can,16,"));
}

#[test]
fn bench_rejects_unsorted_lengths() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.csv");
    let output = unimod(&[
        "bench",
        "--lengths",
        "100,50",
        "--runs",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn compare_stacks_all_three_algorithms() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("compare.csv");
    let output = unimod(&[
        "compare",
        "--n",
        "32",
        "--seed",
        "5",
        "--tol",
        "1e-3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let table = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines[0], "algorithm,iter,isl,psl,elapsed_ms");
    for algo in ["fbmm", "misl", "can"] {
        assert!(
            lines.iter().any(|l| l.starts_with(&format!("{algo},0,"))),
            "no starting row for {algo}"
        );
    }
    // Shared start: all three row-0 ISL values are identical.
    let starts: Vec<&str> = lines
        .iter()
        .filter(|l| l.split(',').nth(1) == Some("0"))
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(starts.len(), 3);
    assert_eq!(starts[0], starts[1]);
    assert_eq!(starts[1], starts[2]);
}

#[test]
fn monte_carlo_batch_writes_suffixed_files() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = design_args(dir.path(), &["--runs", "2", "--tol", "1e-3"]);
    args[2] = "can".to_string();
    let output = run(&args);
    assert_eq!(output.status.code(), Some(0));
    assert!(dir.path().join("trace_run0.csv").exists());
    assert!(dir.path().join("trace_run1.csv").exists());
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("summary.json")).unwrap())
            .unwrap();
    assert_eq!(summary.as_array().map(|a| a.len()), Some(2));
    assert_eq!(String::from_utf8_lossy(&output.stdout).lines().count(), 2);
}
