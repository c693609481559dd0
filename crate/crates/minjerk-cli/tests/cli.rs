//! Behavioral tests of the `minjerk` binary: subcommand output, exit codes,
//! file output, and determinism.

use std::process::{Command, Output};

fn minjerk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minjerk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const CASE1: &[&str] = &[
    "curved", "--x0", "0", "--y0", "0", "--xf", "0", "--yf", "0.3", "--x1", "0.1", "--y1", "0.2",
    "--tf", "1",
];

#[test]
fn curved_case1_csv_has_inserted_passage_row() {
    let out = minjerk(&[CASE1, &["--samples", "101", "--format", "csv"]].concat());
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 103); // header + 101 grid samples + inserted tau1
    assert_eq!(lines[0], "t,tau,x,y,vx,vy,ax,ay,jx,jy");
    for line in &lines[1..] {
        assert_eq!(line.split(',').count(), 10);
        for field in line.split(',') {
            let v: f64 = field.parse().expect("numeric field");
            assert!(v.is_finite());
        }
    }
}

#[test]
fn solve_tau1_prints_case4_root_and_constants() {
    let out = minjerk(&[
        "solve-tau1",
        "--xf",
        "0.6",
        "--yf",
        "0",
        "--x1",
        "0.1",
        "--y1",
        "0.3",
        "--tf",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let tau1: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("tau1 = "))
        .expect("tau1 line")
        .parse()
        .unwrap();
    assert!((tau1 - 0.4355).abs() <= 1e-3, "tau1 = {tau1}");
    for key in ["c1 = ", "c2 = ", "pi1 = ", "pi2 = "] {
        assert!(text.lines().any(|l| l.starts_with(key)), "missing {key}");
    }
}

#[test]
fn validation_errors_exit_with_code_1() {
    let out = minjerk(&["straight", "--xf", "0", "--yf", "0", "--tf", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("degenerate"), "stderr: {err}");

    // via on an endpoint
    let out = minjerk(&[
        "curved", "--xf", "0", "--yf", "0.3", "--x1", "0", "--y1", "0.3", "--tf", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // nonpositive duration
    let out = minjerk(&["straight", "--xf", "0.3", "--yf", "0", "--tf", "0"]);
    assert_eq!(out.status.code(), Some(1));

    // too few samples
    let out = minjerk(&[
        "straight",
        "--xf",
        "0.3",
        "--yf",
        "0",
        "--tf",
        "1",
        "--samples",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("2 samples"));
}

#[test]
fn solver_errors_exit_with_code_2() {
    // a via point 3e-13 m from the start forces a passage time inside the
    // ill-conditioned guard band
    let out = minjerk(&[
        "solve-tau1",
        "--xf",
        "0.3",
        "--yf",
        "0",
        "--x1",
        "3e-13",
        "--y1",
        "0",
        "--tf",
        "1",
    ]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("ill-conditioned"));
}

#[test]
fn io_errors_exit_with_code_3() {
    let out = minjerk(&[
        "straight",
        "--xf",
        "0.3",
        "--yf",
        "0",
        "--tf",
        "1",
        "--out",
        "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_flags_exit_with_code_1() {
    let out = minjerk(&[
        "straight", "--xf", "0.3", "--yf", "0", "--tf", "1", "--bogus",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let out = minjerk(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_successfully() {
    let out = minjerk(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("straight"));
}

#[test]
fn straight_csv_initial_row_has_the_analytic_jerk() {
    let out = minjerk(&[
        "straight",
        "--xf",
        "0.3",
        "--yf",
        "0",
        "--tf",
        "1",
        "--samples",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert_eq!(text.lines().count(), 3);
    let first: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(&first[..8], &[0.0; 8]); // t, tau, x, y, vx, vy, ax, ay
    assert_eq!(first[8], 18.0); // jx = 60 * 0.3 / tf^3
    assert_eq!(first[9], 0.0);
}

#[test]
fn json_exports_expose_the_solution_only_for_curved_plans() {
    let out = minjerk(&[CASE1, &["--format", "json"]].concat());
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let tau1 = doc["tau1"].as_f64().unwrap();
    assert!((tau1 - 0.553).abs() <= 1e-3, "tau1 = {tau1}");
    assert!(doc["c1"].is_f64() && doc["pi2"].is_f64());
    assert_eq!(doc["spec"]["x1"].as_f64(), Some(0.1));

    let out = minjerk(&[
        "straight",
        "--xf",
        "0.3",
        "--yf",
        "0",
        "--tf",
        "1",
        "--samples",
        "2",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert!(doc.get("tau1").is_none());
    assert_eq!(doc["samples"].as_array().unwrap().len(), 2);
}

#[test]
fn midpoint_via_needs_no_extra_sample_row() {
    // tau1 = 0.5 lands exactly on the 101-point grid
    let out = minjerk(&[
        "curved",
        "--xf",
        "0.3",
        "--yf",
        "0",
        "--x1",
        "0.15",
        "--y1",
        "0",
        "--tf",
        "1",
        "--samples",
        "101",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out).lines().count(), 102);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for format in ["csv", "json"] {
        let args = [CASE1, &["--format", format]].concat();
        let first = minjerk(&args);
        let second = minjerk(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "{format} runs differ");
    }
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = std::env::temp_dir().join("minjerk-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("case1.csv");
    let args = [CASE1, &["--format", "csv"]].concat();
    let piped = minjerk(&args);
    let out = minjerk(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), piped.stdout);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_reports_every_property_and_succeeds() {
    let out = minjerk(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("verify case 1"));
    assert!(text.contains("chord midpoint"));
    assert!(text.contains("all checks passed"));
    assert!(!text.contains("FAIL"));
}
