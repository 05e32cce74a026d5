use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.spec"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centralnorm")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let report = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (out.status.code().unwrap(), report)
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("centralnorm-{}-{name}.spec", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn analyze_node_reports_a_verdict() {
    let path = fixture("node");
    let (code, report) = json(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["schema"], "centralnorm.report/1");
    assert_eq!(report["command"], "analyze");
    assert_eq!(report["status"], "verdicts");
    let semi = &report["certificates"]["seminormality"];
    assert_eq!(semi["certificate"]["verdict"], "centrally-seminormal");
    assert_eq!(semi["consistent"], true);
    assert_eq!(report["certificates"]["centrality"]["is_central"], true);
}

#[test]
fn fiber_over_the_grospoint_origin() {
    let path = fixture("grospoint-curve");
    let (code, report) = json(&["fiber", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let fiber = &report["certificates"]["fibers"][0];
    assert_eq!(fiber["real_points"], serde_json::json!(["(0, 0, 0)", "(0, 0, 1)"]));
    assert_eq!(fiber["nonreal_count"], 0);
}

#[test]
fn seed_and_budget_are_echoed() {
    let path = fixture("cusp");
    let (code, report) = json(&["--seed", "7", "--max-steps", "100000", "wc-search", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["seed"], 7);
    assert_eq!(report["max_steps"], 100000);
    assert!(report["steps_used"].as_u64().unwrap() > 0);
    assert_eq!(report["certificates"]["search"]["accepted"], serde_json::json!(["t"]));
}

#[test]
fn missing_hypotheses_are_undecided() {
    let path = scratch("bare", "VARS x y\nKIND plane-curve\nGENERATORS\n  y^2 - x^3\n");
    let (code, report) = json(&["analyze", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    assert_eq!(report["status"], "undecided");
    assert_eq!(report["certificates"]["seminormality"]["certificate"]["verdict"], "unsupported");
}

#[test]
fn input_errors_exit_with_two() {
    let bad = scratch("syntax", "VARS x y\nKIND plane-curve\nGENERATORS\n  y^2 - x(x+1)\n");
    let (code, report) = json(&["analyze", bad.to_str().unwrap()]);
    std::fs::remove_file(&bad).ok();
    assert_eq!(code, 2);
    assert_eq!(report["status"], "input-error");
    assert!(report["error"].as_str().unwrap().contains("line 4"));

    let nonreduced = scratch("square", "VARS x y\nKIND plane-curve\nGENERATORS\n  (y - x^2)^2\n");
    let (code, _) = json(&["analyze", nonreduced.to_str().unwrap()]);
    std::fs::remove_file(&nonreduced).ok();
    assert_eq!(code, 2);

    let out = run(&["analyze", "/nonexistent/input.spec"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_with_three() {
    let path = fixture("tacnode");
    let (code, report) = json(&["--max-steps", "5", "wc-search", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(report["status"], "resource-limit");
}

#[test]
fn text_output_ends_with_the_status() {
    let out = run(&["continuity", fixture("node").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("t = (y)/(x): continuous on the central locus: no"), "{text}");
    assert!(text.lines().last().unwrap().starts_with("status: verdicts (exit 0)"));
}

#[test]
fn verify_paper_passes() {
    let (code, report) = json(&["verify-paper"]);
    assert_eq!(code, 0);
    let c = &report["certificates"];
    assert_eq!(c["passed"], c["total"]);
    assert!(c["entries"].as_array().unwrap().iter().all(|e| e["pass"] == true));
}
