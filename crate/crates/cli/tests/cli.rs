use std::process::{Command, Output};

use serde_json::Value;
use tempered::hermite::hermite_functions;
use tempered::VerificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tempered"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn coeff(v: &Value, i: usize) -> (f64, f64) {
    let c = &v["coeffs"][i];
    (c[0].as_f64().unwrap(), c[1].as_f64().unwrap())
}

#[test]
fn verify_passes_at_order_16() {
    let out = run(&["verify", "--order", "16", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.overall);
    assert_eq!(report.config.order, 16);
    // the report reserializes to the same bytes
    assert_eq!(report.to_json().unwrap() + "\n", String::from_utf8(out.stdout).unwrap());
}

#[test]
fn invalid_configuration_exits_2() {
    assert_eq!(run(&["verify", "--order", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--order", "8", "--quad", "10"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_csv_has_row_per_check() {
    let out = run(&["verify", "--order", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("name,anchor,error,tol,passed"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
}

#[test]
fn expand_dirac_at_origin() {
    let out = run(&["expand", "dirac@0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let d = &v["distribution"];
    assert_eq!(d["kind"], "distribution");
    assert_eq!(coeff(d, 0), (0.7511255444649425, 0.0));
    assert_eq!(coeff(d, 1), (0.0, 0.0));
    assert_eq!(v["indices"][5], serde_json::json!([5]));
}

#[test]
fn expand_hermite_and_unknown() {
    let out = run(&["expand", "hermite@2"]);
    let d = json(&out)["distribution"].clone();
    for i in 0..=32 {
        let (re, im) = coeff(&d, i);
        let expect = if i == 2 { 1.0 } else { 0.0 };
        assert!((re - expect).abs() < 1e-10 && im == 0.0);
    }
    let bad = run(&["expand", "nosuch"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}

#[test]
fn expand_csv_uses_17_significant_digits() {
    let out = run(&["expand", "dirac@0", "--order", "4", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let first = text.lines().nth(1).unwrap();
    assert_eq!(first, "0,7.5112554446494251e-1,0.0000000000000000e0");
}

#[test]
fn deriv_of_ground_state() {
    let out = run(&["deriv", "hermite@0", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let (fam, _) = coeff(&v["via_family"], 1);
    let (op, _) = coeff(&v["via_operator"], 1);
    // u′(h_1) = −⟨h_0, h_1′⟩
    assert!((fam + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    assert_eq!(fam, op);
    assert_eq!(v["max_abs_difference"], 0.0);
}

#[test]
fn zeroth_derivative_is_expansion() {
    let e = json(&run(&["expand", "dirac@0"]));
    let d = json(&run(&["deriv", "dirac@0", "0"]));
    assert_eq!(e["distribution"], d["via_family"]);
    assert_eq!(e["distribution"], d["via_operator"]);
}

#[test]
fn second_derivative_paths_agree() {
    let v = json(&run(&["deriv", "gaussian", "2"]));
    assert!(v["max_abs_difference"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn family_eval_examples() {
    let v = json(&run(&["family-eval", "dirac", "0.5", "hermite@1"]));
    let expect = hermite_functions(1, 0.5)[1];
    assert!((v["pairing"][0].as_f64().unwrap() - expect).abs() < 1e-12);
    assert!((v["pointwise"][0].as_f64().unwrap() - expect).abs() < 1e-12);

    let v = json(&run(&["family-eval", "dirac", "-1.25", "zero"]));
    assert_eq!(v["pairing"], serde_json::json!([0.0, 0.0]));

    let v = json(&run(&["family-eval", "dirac'", "0", "hermite@0"]));
    assert!(v["pairing"][0].as_f64().unwrap().abs() < 1e-16);
    assert!(v["pointwise"][0].as_f64().unwrap().abs() < 1e-16);

    assert_eq!(run(&["family-eval", "nosuch", "0", "hermite@0"]).status.code(), Some(2));
    assert_eq!(run(&["family-eval", "dirac", "0", "nosuch"]).status.code(), Some(2));
}

#[test]
fn two_dimensional_ids() {
    let out = run(&["expand", "dirac@0.5,-0.25", "--dim", "2", "--order", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let d = json(&out)["distribution"].clone();
    assert_eq!(d["dim"], 2);
    assert_eq!(d["coeffs"].as_array().unwrap().len(), 25);
    assert_eq!(run(&["expand", "dirac@0.5", "--dim", "2"]).status.code(), Some(2));
}

#[test]
fn output_path_receives_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["verify", "--order", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: VerificationReport = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!(report.overall);
}
