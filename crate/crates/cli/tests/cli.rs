use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cyclemax(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cyclemax"))
        .args(args)
        .env_remove("CYCLEMAX_CACHE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_conjecture_six() {
    let out = cyclemax(&["verify", "conjecture", "--n", "6", "--format", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["all_passed"], true);
    assert_eq!(doc["results"][0]["extremal_value"], "15");
    for key in ["tool_version", "command", "params", "results", "all_passed"] {
        assert!(doc.get(key).is_some(), "{key}");
    }
}

#[test]
fn formula_three_three() {
    let doc = json(&cyclemax(&["formula", "--a", "3", "--b", "3"], ""));
    assert_eq!(doc["results"][0]["spectrum"]["4"], "9");
    assert_eq!(doc["results"][0]["spectrum"]["6"], "6");
    assert_eq!(doc["results"][0]["total"], "15");
}

#[test]
fn count_reads_graph6_lines() {
    let out = cyclemax(&["count"], "Dhc\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["spectrum"], serde_json::json!({"5": "1"}));
    let bad = cyclemax(&["count"], "D??\nnot-a-graph\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cyclemax(&["verify", "conjecture", "--n", "13"], "").status.code(), Some(2));
    assert_eq!(cyclemax(&["enumerate", "--n", "14", "--mode", "maximal"], "").status.code(), Some(2));
    assert_eq!(cyclemax(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(cyclemax(&["--workers", "0", "report"], "").status.code(), Some(2));
}

#[test]
fn enumerate_csv_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["enumerate", "--n", "5", "--mode", "all", "--format", "csv", "--cache-dir", cache];
    let first = cyclemax(&args, "");
    assert_eq!(first.status.code(), Some(0));
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    assert_eq!(text.lines().next(), Some("n,canonical_key,total_cycles,spectrum"));
    assert_eq!(text.lines().count(), 15);
    assert!(dir.path().join("tf_all_5.g6").exists());
    assert!(String::from_utf8_lossy(&first.stderr).contains("Regenerated"));
    let second = cyclemax(&args, "");
    assert_eq!(second.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("Hit"));

    std::fs::write(dir.path().join("tf_all_5.g6"), "D~{\n").unwrap();
    let third = cyclemax(&args, "");
    assert_eq!(third.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("Regenerated"));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cyclemax"))
        .args(["enumerate", "--n", "4", "--mode", "maximal"])
        .env("CYCLEMAX_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join("tf_maximal_4.g6").exists());
}

#[test]
fn text_summary_for_checks() {
    let out = cyclemax(&["verify", "paths6", "--format", "text"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS"));
}
