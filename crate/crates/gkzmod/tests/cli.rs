//! End-to-end CLI tests against the committed problem files and their
//! expected-output fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

use gkzmod::problem::ResultDocument;

fn problems_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkzmod"))
        .args(args)
        .current_dir(problems_dir())
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "command {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(problems_dir().join("expected").join(name)).unwrap()
}

#[test]
fn airy_indicial_text() {
    assert_eq!(stdout_of(&["indicial", "airy.json"]), fixture("airy_indicial.txt"));
}

#[test]
fn airy_indicial_json_matches_fixture() {
    assert_eq!(
        stdout_of(&["indicial", "airy.json", "--format", "json"]),
        fixture("airy_indicial.json")
    );
}

#[test]
fn airy_initial_json_matches_fixture() {
    assert_eq!(
        stdout_of(&["initial", "airy.json", "--format", "json"]),
        fixture("airy_initial.json")
    );
}

#[test]
fn bessel_negative_weight_indicial_is_zero() {
    assert_eq!(
        stdout_of(&["indicial", "bessel_w_neg.json"]),
        fixture("bessel_w_neg_indicial.txt")
    );
}

#[test]
fn bessel_positive_weight_fixtures() {
    assert_eq!(
        stdout_of(&["indicial", "bessel_w_pos.json", "--format", "json"]),
        fixture("bessel_w_pos_indicial.json")
    );
    assert_eq!(
        stdout_of(&["pairs", "bessel_w_pos.json", "--format", "json"]),
        fixture("bessel_w_pos_pairs.json")
    );
}

#[test]
fn airy_series_fixture_and_rank_bound() {
    assert_eq!(
        stdout_of(&["series", "airy.json", "--K", "10", "--format", "json"]),
        fixture("airy_series_K10.json")
    );
    assert_eq!(stdout_of(&["rank-bound", "airy.json"]), fixture("airy_rank_bound.txt"));
}

#[test]
fn output_is_deterministic() {
    let a = stdout_of(&["indicial", "bessel_w_pos.json", "--format", "json"]);
    let b = stdout_of(&["indicial", "bessel_w_pos.json", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn json_document_round_trips() {
    let text = stdout_of(&["check", "airy.json", "--K", "15", "--format", "json"]);
    let doc: ResultDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    assert_eq!(doc.command, "check");
    assert_eq!(doc.result["all_ok"], serde_json::json!(true));
}

#[test]
fn residual_check_passes_on_all_three_instances() {
    for file in ["airy.json", "bessel_w_pos.json"] {
        let text = stdout_of(&["check", file, "--format", "json"]);
        let doc: ResultDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.result["all_ok"], serde_json::json!(true), "{file}");
    }
}

#[test]
fn elimination_route_unit_ideal_exit_code() {
    let out = run(&["indicial", "bessel_w_neg.json", "--method", "elimination"]);
    assert_eq!(out.status.code(), Some(6));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("error:"), "stderr: {err}");
}

#[test]
fn missing_file_and_bad_command_exit_codes() {
    assert_eq!(run(&["indicial", "no_such_file.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate", "airy.json"]).status.code(), Some(2));
}

#[test]
fn invalid_spec_is_an_input_error() {
    let dir = std::env::temp_dir().join("gkzmod_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"A": [[2, 4]], "beta": ["0"], "w": [1, 1]}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_gkzmod"))
        .args(["toric", path.to_str().unwrap()])
        .output()
        .unwrap();
    // columns of A do not span Z^1
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_env_var_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_gkzmod"))
        .args(["rank-bound", "airy.json", "--format", "json"])
        .env("GKZMOD_SEED", "42")
        .current_dir(problems_dir())
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: ResultDocument = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc.result["rank_lower_bound"], serde_json::json!(3));
    assert!(doc.diagnostics.genericity.iter().any(|s| s.contains("42")));
}
