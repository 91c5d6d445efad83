//! Integration tests against the compiled binary: exit codes, JSON shape,
//! and cross-process determinism.

use std::process::{Command, Output};

fn bluher(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bluher"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn solve_worked_example_schema() {
    let out = bluher(&["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["params"]["p"], 2);
    assert_eq!(v["params"]["k"], 1);
    assert_eq!(v["params"]["n"], 3);
    assert_eq!(v["params"]["d"], 1);
    assert_eq!(v["params"]["m"], 3);
    assert_eq!(v["params"]["q"], 2);
    assert_eq!(v["params"]["Q"], 8);
    assert_eq!(v["params"]["a"], 1);
    assert_eq!(v["params"]["modulus"], serde_json::json!([1, 1, 0, 1]));
    assert_eq!(v["case"], "pd1");
    assert_eq!(v["count"], 3);
    assert_eq!(v["roots"], serde_json::json!([2, 4, 6]));
    assert!(v["diagnostics"].is_object());
    assert!(v["version"].is_string());
}

#[test]
fn solve_runs_are_byte_identical() {
    let args = ["solve", "--p", "3", "--k", "1", "--n", "3", "--a", "1", "--verify"];
    let first = bluher(&args);
    let second = bluher(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_subcommand_reports_match() {
    let out = bluher(&["verify", "--p", "2", "--k", "2", "--n", "4", "--a", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["matches"], true);
    assert_eq!(v["solver_roots"], v["oracle_roots"]);
    assert_eq!(v["case"], "char2-two");
}

#[test]
fn census_subcommand_counts() {
    let out = bluher(&["census", "--p", "2", "--k", "1", "--n", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["total_roots"], 6);
    assert_eq!(v["classified"], 7);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn param_subcommand_roots() {
    let out = bluher(&["param", "--p", "2", "--k", "1", "--n", "3", "--u", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["a"], 1);
    assert_eq!(v["count"], 3);
    assert_eq!(v["roots"], serde_json::json!([2, 4, 6]));
}

#[test]
fn text_format_is_human_readable() {
    let out = bluher(&[
        "solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--format", "text",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("case: pd1 (3 roots)"));
    assert!(text.contains("t^2 + t"));
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        vec!["solve", "--p", "6", "--k", "1", "--n", "3", "--a", "1"],
        vec!["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "0"],
        vec!["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "8"],
        vec!["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--poly", "1,1,1,1"],
        vec!["param", "--p", "2", "--k", "1", "--n", "3", "--u", "0"],
    ] {
        let out = bluher(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty());
    }
    // Unknown flags are also a usage error, reported by the parser itself.
    let out = bluher(&["solve", "--p", "2", "--nope", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_fields_exit_3() {
    let out = bluher(&["census", "--p", "2", "--k", "1", "--n", "20"]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8_lossy(&out.stderr);
    assert!(text.contains("field too large"));
}
