use std::io::Write;
use std::process::{Command, Output};

use eigencurve_cli::{parse_input, InputDocument};
use serde_json::Value;

const WORKED: &str = r#"{"n": 2, "coefficients": [[[-1, 0], [0, 0]], [[0, 1], [1, 0]], [[1, 0], [0, 0]]]}"#;
const DIAG_SQUARE: &str = r#"{"n": 2, "coefficients": [[[0, 0], [0, 1]], [[0, 0], [0, 0]], [[1, 0], [0, 0]]]}"#;
const IDENTITY: &str = r#"{"n": 2, "coefficients": [[[1, 0], [0, 1]]]}"#;
const SINGULAR: &str = r#"{"n": 2, "coefficients": [[[0, 0], [0, 0]], [[1, 0], [0, 0]]]}"#;
const PENCIL: &str = r#"{"n": 2, "coefficients": [[["-1", 0], [0, "-2"]], [[1, 0], [0, 1]]]}"#;

fn input_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn eigencurve(args: &[&str], contents: &str) -> Output {
    let f = input_file(contents);
    Command::new(env!("CARGO_BIN_EXE_eigencurve")).args(args).arg(f.path()).output().unwrap()
}

fn structured(sub: &str, contents: &str) -> (Value, i32) {
    let out = eigencurve(&[sub, "--format", "structured"], contents);
    let json = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (json, out.status.code().unwrap())
}

#[test]
fn worked_example_all() {
    let (r, code) = structured("all", WORKED);
    assert_eq!(code, 0);
    assert_eq!(r["det"], "-λ^2");
    assert_eq!(r["admissibility"]["admissible"], true);
    assert_eq!(r["admissibility"]["witnesses"][0]["gcd"], "λ");
    let e = &r["eigenvalues"][0];
    assert_eq!(e["at"], "0");
    assert_eq!(e["multiplicity"], 2);
    assert_eq!(e["affine_index"]["value"], 2);
    assert_eq!(e["resolution_index"]["value"], 2);
    assert_eq!(r["bezout"]["total"], 4);
    assert_eq!(r["bezout"]["infinity_multiplicity"], 2);
    assert_eq!(r["bezout"]["meets_infinity"], true);
    assert_eq!(r["bezout"]["projective_points"], serde_json::json!(["0", "∞"]));
    assert_eq!(r["status"], "ok");
}

#[test]
fn non_admissible_mismatch_is_not_a_failure() {
    let (r, code) = structured("all", DIAG_SQUARE);
    assert_eq!(code, 0);
    assert_eq!(r["admissibility"]["admissible"], false);
    assert_eq!(r["admissibility"]["witnesses"][0]["gcd"], "λ^2");
    let e = &r["eigenvalues"][0];
    assert_eq!(e["multiplicity"], 2);
    assert_eq!(e["affine_index"]["value"], 1);
    assert_eq!(e["resolution_index"]["value"], 2);
    assert!(e["note"].as_str().unwrap().contains("not admissible"));
    let affine =
        r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "affine index = multiplicity at 0").unwrap();
    assert_eq!(affine["holds"], false);
    assert_eq!(affine["required"], false);
}

#[test]
fn constant_identity_has_empty_spectrum() {
    let (r, code) = structured("spectrum", IDENTITY);
    assert_eq!(code, 0);
    assert_eq!(r["det"], "1");
    assert_eq!(r["spectrum"]["rational_eigenvalues"], serde_json::json!([]));
    assert_eq!(r["spectrum"]["total_finite_multiplicity"], 0);
}

#[test]
fn pencil_classical_and_targeted_point() {
    let (r, code) = structured("classical", PENCIL);
    assert_eq!(code, 0);
    assert_eq!(r["classical"]["t"], serde_json::json!([["1", "0"], ["0", "2"]]));
    assert_eq!(r["classical"]["identity"]["holds"], true);

    let out = eigencurve(&["multiplicity", "--at", "3/2", "--format", "structured"], PENCIL);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["eigenvalues"][0]["at"], "3/2");
    assert_eq!(r["eigenvalues"][0]["multiplicity"], 0);
}

#[test]
fn exit_codes() {
    let (r, code) = structured("all", SINGULAR);
    assert_eq!(code, 3);
    assert_eq!(r["marker"], "Σ(L) = k");
    assert_eq!(r["status"], "degenerate");

    // No rational eigenvalues and no --at.
    assert_eq!(eigencurve(&["intersect"], IDENTITY).status.code(), Some(2));
    assert_eq!(eigencurve(&["spectrum"], r#"{"n": 2, "coefficients": [[[1, 0]]]}"#).status.code(), Some(2));
    let bad = eigencurve(&["spectrum"], r#"{"n": 1, "coefficients": [[["x"]]]}"#);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("coefficients[0][0][0]"));
    assert_eq!(eigencurve(&["classical"], WORKED).status.code(), Some(2));
    assert_eq!(eigencurve(&["spectrum", "--at", "1/0"], WORKED).status.code(), Some(2));
    let missing =
        Command::new(env!("CARGO_BIN_EXE_eigencurve")).args(["all", "/nonexistent/input.json"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn structured_reports_are_deterministic() {
    for input in [WORKED, DIAG_SQUARE, PENCIL] {
        let a = eigencurve(&["all", "--format", "structured"], input).stdout;
        let b = eigencurve(&["all", "--format", "structured"], input).stdout;
        assert_eq!(a, b);
    }
}

#[test]
fn generated_documents_round_trip() {
    for seed in 0..5 {
        let out = Command::new(env!("CARGO_BIN_EXE_eigencurve"))
            .args(["generate", "--seed", &seed.to_string(), "--n", "2"])
            .output()
            .unwrap();
        assert!(out.status.success());
        let l = parse_input(&out.stdout).unwrap();
        let again = InputDocument::from_matrix_polynomial(&l).to_json();
        assert_eq!(again.trim_end(), String::from_utf8(out.stdout.clone()).unwrap().trim_end());
        let report = eigencurve(&["all"], &again);
        assert_eq!(report.status.code(), Some(0), "{}", String::from_utf8_lossy(&report.stdout));
    }
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eigencurve"))
        .args(["spectrum", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(WORKED.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("det L = -λ^2"));
}
