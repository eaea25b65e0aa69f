//! End-to-end runs of the installed binary: exit codes carry the verdict,
//! stdout carries the report, and identical invocations produce identical
//! bytes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infstab"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a single JSON document")
}

#[test]
fn check_reports_a_stable_vee_and_exits_zero() {
    let out = run(&["check", fixture("absval.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["stable"], serde_json::json!(true));
    assert_eq!(v["reason"], serde_json::json!("NonMonotonicManyDom"));
    assert_eq!(v["specialization"], serde_json::json!("theorem1"));
}

#[test]
fn check_flags_a_one_sided_ramp_with_exit_one() {
    let out = run(&["check", fixture("relu.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["stable"], serde_json::json!(false));
    assert_eq!(v["reason"], serde_json::json!("MonotoneFiniteInfUnstable"));
}

#[test]
fn check_maps_a_bad_spec_file_to_exit_two() {
    let out = run(&["check", fixture("broken.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("error"), "stderr explains the failure: {err}");
}

#[test]
fn check_maps_a_missing_file_to_exit_two() {
    let out = run(&["check", "no-such-file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_text_mode_prints_plain_lines() {
    let out = run(&["check", fixture("absval.json").to_str().unwrap(), "--text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("stable: true"), "got: {text}");
    assert!(text.contains("reason: NonMonotonicManyDom"), "got: {text}");
}

#[test]
fn witness_tabulates_minus_infinity_rows_for_the_ramp() {
    let out = run(&["witness", fixture("relu.json").to_str().unwrap(), "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], serde_json::json!(true));
    let rows = v["rows"].as_array().expect("rows is an array");
    assert_eq!(rows.len(), 8);
    for row in rows {
        assert_eq!(row["inf"], serde_json::json!("-inf"));
    }
}

#[test]
fn witness_refuses_a_stable_spec() {
    let out = run(&["witness", fixture("absval.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("stable"), "stderr names the obstruction: {err}");
}

#[test]
fn conjugate_writes_a_spec_the_parser_accepts() {
    let out_path = std::env::temp_dir().join("infstab-cli-test-conjugate.json");
    let out = run(&[
        "conjugate",
        fixture("abs_on_unit.json").to_str().unwrap(),
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["continuous_at_zero"], serde_json::json!(true));
    assert_eq!(v["variable"], serde_json::json!("t"));

    // The written conjugate of |x| restricted to [−1, 1] is max(0, |t| − 1).
    let text = std::fs::read_to_string(&out_path).expect("the output file exists");
    let conj = infstab::parse_spec(&text).expect("the output file is a valid spec");
    let at = |p: i32| {
        conj.eval(&infstab::Rational::from_integer(p.into())).unwrap()
    };
    let fin = |p: i32| infstab::ExtReal::Finite(infstab::Rational::from_integer(p.into()));
    assert_eq!(at(0), fin(0));
    assert_eq!(at(3), fin(2));
    assert_eq!(at(-3), fin(2));
    std::fs::remove_file(&out_path).ok();
}

#[test]
fn stress_emits_byte_identical_reports_for_the_same_seed() {
    let spec_path = fixture("absval.json");
    let args = ["stress", spec_path.to_str().unwrap(), "--seed", "11", "--n-max", "4096"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let v = stdout_json(&first);
    let reports = v.as_array().expect("one report per family");
    assert_eq!(reports.len(), 3);
    let names: Vec<_> = reports.iter().map(|r| r["family"].as_str().unwrap()).collect();
    assert_eq!(names, ["additive_shrink", "breakpoint_jitter", "tail_steepen"]);
}

#[test]
fn stress_rejects_an_unstable_base() {
    let out = run(&["stress", fixture("relu.json").to_str().unwrap(), "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stress_honors_a_family_subset() {
    let out = run(&[
        "stress",
        fixture("absval.json").to_str().unwrap(),
        "--n-max",
        "16",
        "--families",
        "tail_steepen",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["family"], serde_json::json!("tail_steepen"));
}

#[test]
fn r2gap_lists_one_zero_minimum_per_index() {
    let out = run(&["r2gap", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let rows = v.as_array().expect("rows is an array");
    assert_eq!(rows.len(), 12);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row["n"], serde_json::json!(i as u64 + 1));
        assert_eq!(row["min_on_k"], serde_json::json!(0));
    }
}
