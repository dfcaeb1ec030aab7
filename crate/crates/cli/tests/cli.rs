use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn pbw(args: &[&str], name: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbw")).args(args).arg(fixture(name)).output().unwrap()
}

fn result(args: &[&str], name: &str) -> Value {
    let out = pbw(args, name);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    doc["result"].clone()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

#[test]
fn commutative_basis() {
    let r = result(&["--reduced"], "commutative_gb.toml");
    assert_eq!(strings(&r["basis"]), ["y^2 + y", "x*y + x", "x^2 + y"]);
}

#[test]
fn hodge_filtration_of_weyl_module() {
    let r = result(&[], "weyl_vfiltration.toml");
    assert_eq!(r["generators"], serde_json::json!([{ "element": "1", "degree": 0 }]));
    assert_eq!(r["first_k"], r["converged_at_k"]);
    assert_eq!(r["equal"], true);
}

#[test]
fn truncated_polynomial_filtration() {
    let r = result(&[], "cubic_vfiltration.toml");
    assert_eq!(r["generators"], serde_json::json!([{ "element": "x", "degree": 1 }]));
}

#[test]
fn parabola_structure_sheaf() {
    let r = result(&["--degree-bound", "2"], "parabola_vfiltration.toml");
    assert_eq!(r["generators"], serde_json::json!([{ "element": "1", "degree": 0 }]));
    assert_eq!(r["trusted_presentation"], true);
}

#[test]
fn unit_ideal_membership() {
    let r = result(&[], "weyl_member.toml");
    assert_eq!(r["member"], true);
    assert_eq!(strings(&r["coefficients"]), ["d", "-x"]);
}

#[test]
fn graded_generator() {
    let r = result(&[], "weyl_gr.toml");
    assert_eq!(strings(&r["generators"]), ["x*d"]);
    assert!(strings(&r["relations"]).is_empty());
}

#[test]
fn module_elements_carry_labels() {
    let r = result(&[], "weyl_filtration.toml");
    let gens: Vec<&str> = r["generators"].as_array().unwrap().iter().map(|g| g["element"].as_str().unwrap()).collect();
    assert!(gens.iter().all(|g| g.contains("e0") || g.contains("e1")), "{gens:?}");
}

#[test]
fn oracle_cross_check_passes() {
    for name in ["commutative_gb.toml", "weyl_member.toml", "weyl_nf.toml", "plane_intersect.toml", "weyl_syz.toml"] {
        let out = pbw(&["--oracle-check", "4"], name);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(doc["oracle"]["checked"], true, "{name}");
    }
}

#[test]
fn malformed_file_reports_position() {
    let out = pbw(&[], "malformed.toml");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 5, column 1"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_polynomial_reports_field_and_column() {
    let out = pbw(&[], "bad_polynomial.toml");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("module.generators[1]") && err.contains("column 8"), "{err}");
}

#[test]
fn unsupported_weights_exit_three() {
    assert_eq!(pbw(&[], "weyl2_unsupported.toml").status.code(), Some(3));
}

#[test]
fn exhausted_budget_exits_four() {
    assert_eq!(pbw(&["--max-k", "0"], "plane_vfiltration.toml").status.code(), Some(4));
}

#[test]
fn missing_file_is_a_validation_error() {
    assert_eq!(pbw(&[], "no_such_file.toml").status.code(), Some(2));
}
