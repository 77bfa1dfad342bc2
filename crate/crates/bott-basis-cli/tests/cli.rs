//! Process-level tests of the binary: exit codes, output stability, the
//! report cache, and the serialization schema.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bott-basis"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn basis_markdown_reproduces_the_example_table() {
    let out = run(&["basis", "--n", "3", "--word", "1,2,1", "--lambda", "1,1", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for row in [
        "| (121) | s(121) | (2,1,0) | (-2,-2,-1) |",
        "| (122) | s(122) | (1,2,0) | (-1,-2,-1) |",
        "| (131) | s(131) | (2,0,1) | (-1,-1,-1) |",
        "| (132) | s(132) | (0,0,0) | (0,-1,-1) |",
        "| (123) | s(123) | (0,0,0) | (0,0,0) |",
        "| (232) | s(232) | (0,2,1) | (1,-1,-1) |",
        "| (133) | s(133) | (1,0,2) | (1,1,0) |",
        "| (233) | s(233) | (0,1,2) | (2,1,0) |",
    ] {
        assert!(text.contains(row), "missing row {row} in:\n{text}");
    }
    assert!(text.contains("conjecture status: consistent"));
}

#[test]
fn non_reduced_word_with_lambda_is_a_usage_error() {
    let out = run(&["basis", "--n", "3", "--word", "1,1,2", "--lambda", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not a reduced expression"), "stderr: {err}");
}

#[test]
fn sl2_has_two_leaves() {
    let out = run(&["basis", "--n", "2", "--word", "1", "--lambda", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["leaves"].as_array().unwrap().len(), 2);
    assert_eq!(v["diagnostics"]["dim_found"], 2);
}

#[test]
fn missing_weight_data_is_a_usage_error() {
    let out = run(&["basis", "--n", "3", "--word", "1,2,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exactly one of --lambda or --mu"));
}

#[test]
fn json_output_is_stable_modulo_timing() {
    let args = ["basis", "--n", "3", "--word", "1,2,1", "--lambda", "1,1", "--format", "json"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    let strip = |s: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().insert("timing_ms".into(), 0.into());
        v
    };
    assert_eq!(
        serde_json::to_string(&strip(&a)).unwrap(),
        serde_json::to_string(&strip(&b)).unwrap()
    );
}

#[test]
fn cache_round_trips_and_never_changes_results() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = |extra: &[&str]| {
        let mut v = vec![
            "basis", "--n", "3", "--word", "1,2,1", "--mu", "0,1,1", "--format", "json",
        ];
        v.extend_from_slice(extra);
        v.iter().map(|s| s.to_string()).collect::<Vec<_>>()
    };
    let fresh = bin().args(args(&[])).output().unwrap();
    let first = bin()
        .args(args(&["--cache-dir", cache]))
        .output()
        .unwrap();
    assert!(cache_dir_populated(dir.path()));
    let second = bin()
        .args(args(&["--cache-dir", cache]))
        .output()
        .unwrap();
    let parse = |o: &Output| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().insert("timing_ms".into(), 0.into());
        v
    };
    assert_eq!(parse(&fresh), parse(&first));
    assert_eq!(parse(&first), parse(&second));
}

fn cache_dir_populated(dir: &Path) -> bool {
    std::fs::read_dir(dir)
        .map(|entries| entries.count() > 0)
        .unwrap_or(false)
}

#[test]
fn string_compare_reports_the_known_witness() {
    let out = run(&[
        "string-compare", "--n", "3", "--word", "1,2,1", "--lambda", "1,1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "EQUIVALENT");
    assert_eq!(v["matrix"], serde_json::json!([[1, 1, 1], [0, 1, 1], [0, 0, 1]]));
    assert_eq!(v["offset"], serde_json::json!([-2, -2, -1]));
    assert_eq!(v["points_equal"], true);
    assert_eq!(v["hull_vertices_equal"], true);
}

#[test]
fn string_compare_trivial_weight_uses_identity() {
    let out = run(&[
        "string-compare", "--n", "3", "--word", "1,2,1", "--lambda", "0,0", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "EQUIVALENT");
    assert_eq!(v["matrix"], serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
}

#[test]
fn string_compare_requires_lambda() {
    let out = run(&["string-compare", "--n", "3", "--word", "1,2,1", "--mu", "0,1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mu_mode_reports_found_dimension_without_expectation() {
    let out = run(&["basis", "--n", "3", "--word", "1,2,1", "--mu", "0,1,1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["diagnostics"]["dim_expected"], serde_json::Value::Null);
    assert_eq!(v["diagnostics"]["dim_found"], 8);
    assert_eq!(v["config"]["lambda"], serde_json::Value::Null);
}

#[test]
fn rational_coefficients_serialize_as_fraction_strings() {
    // shrink a leaf representative: in the example every coefficient is ±1,
    // so scale-invariance of the schema is checked on the raw strings
    let out = run(&["basis", "--n", "3", "--word", "1,2,1", "--lambda", "1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for leaf in v["leaves"].as_array().unwrap() {
        for term in leaf["combination"].as_array().unwrap() {
            let c = term["coeff"].as_str().unwrap();
            assert!(!c.contains('.'), "decimal leaked into coefficient {c}");
            assert!(c.parse::<num::BigRational>().is_ok(), "unparsable {c}");
            // tableaux serialize as position -> columns -> rows
            assert!(term["tableau"].is_array());
        }
    }
}

#[test]
fn checks_can_be_attached_to_the_basis_report() {
    let out = run(&[
        "basis", "--n", "3", "--word", "1,2,1", "--lambda", "1,1", "--format", "json",
        "--check-character", "--check-string", "--check-prevaluation",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["checks"]["character"]["status"], "pass");
    assert_eq!(v["checks"]["string_compare"]["status"], "EQUIVALENT");
    assert_eq!(v["checks"]["prevaluation"]["status"], "pass");
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "basis", "--n", "2", "--word", "1", "--lambda", "2", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["diagnostics"]["dim_found"], 3);
}

#[test]
fn selftest_passes_on_a_fresh_build() {
    let out = run(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 10);
    assert!(!text.contains("[FAIL]"));
}
