use std::io::Write;
use std::process::{Command, Output, Stdio};

use qz_core::coeff::QTRational;
use qz_core::isotypic::SubspaceBasis;
use qz_core::qmatrix::QPolynomial;
use qz_core::symplectic::e_r;
use serde_json::Value;

fn qz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qz"))
        .args(args)
        .output()
        .expect("qz runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json", "--no-timing"]);
    let out = qz(&all);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn coeff_of(sym: &Value, lambda: &[u32]) -> QTRational {
    let entry = sym["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| {
            c["lambda"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap() as u32)
                .eq(lambda.iter().copied())
        })
        .unwrap_or_else(|| panic!("no m{lambda:?} in {sym}"));
    let num: QTRational = entry["value"]["num"].as_str().unwrap().parse().unwrap();
    let den: QTRational = entry["value"]["den"].as_str().unwrap().parse().unwrap();
    num.checked_div(&den).unwrap()
}

#[test]
fn report_shape() {
    let (code, v) = json(&["detq", "--N", "2"]);
    assert_eq!(code, 0);
    for key in ["verb", "inputs", "checks", "pass", "engine_version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v.get("timing").is_none());
    assert_eq!(v["result"]["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn pfaffian_verification() {
    let (code, v) = json(&["pfaffian", "--N", "4", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"][0]["residual_terms"], 0);
    assert_eq!(qz(&["pfaffian", "--N", "3"]).status.code(), Some(1));
}

#[test]
fn verification_suites() {
    let (code, v) = json(&["verify", "--suite", "relations", "--N", "4"]);
    assert_eq!(code, 0);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty() && checks.iter().all(|c| c["pass"] == true));

    let (code, v) = json(&["verify", "--suite", "dimensions", "--N", "4", "--deg", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dimensions"], serde_json::json!([1, 2]));

    let (code, v) = json(&["verify", "--suite", "invariance", "--N", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
}

#[test]
fn zonal_vectors() {
    let (code, v) = json(&["zonal", "--mu", "1", "--N", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["restriction"], "s1 + s2");
    let z: QPolynomial = serde_json::from_value(v["result"]["vector"].clone()).unwrap();
    let e1 = e_r(1, 4).unwrap();
    assert_eq!(
        SubspaceBasis::from_vectors(4, [&z]),
        SubspaceBasis::from_vectors(4, [&e1])
    );

    let (_, v) = json(&["zonal", "--mu", "1,1", "--N", "4"]);
    assert_eq!(v["result"]["restriction"], "s1*s2");

    let (code, v) = json(&["zonal", "--mu", "2", "--N", "4", "--compare"]);
    assert_eq!(code, 0);
    let matching: Vec<&str> = v["result"]["comparison"]["matching"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_str().unwrap())
        .collect();
    assert!(matching.contains(&"(q^2,q^4)"));
}

#[test]
fn macdonald_polynomials() {
    let (code, v) = json(&["macdonald", "--lambda", "1", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["coeffs"].as_array().unwrap().len(), 1);
    assert_eq!(coeff_of(&v["result"], &[1]), QTRational::one());

    let (_, v) = json(&["macdonald", "--lambda", "2", "--n", "2"]);
    let expected: QTRational = "(1+q)*(1-t)/(1-q*t)".parse().unwrap();
    assert_eq!(coeff_of(&v["result"], &[1, 1]), expected);

    let (_, v) = json(&["macdonald", "--lambda", "2", "--n", "2", "--t", "q"]);
    assert_eq!(coeff_of(&v["result"], &[2]), QTRational::one());
    assert_eq!(coeff_of(&v["result"], &[1, 1]), QTRational::one());

    assert_eq!(
        qz(&["macdonald", "--lambda", "1,1,1", "--n", "2"]).status.code(),
        Some(1)
    );
}

#[test]
fn act_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qz"))
        .args([
            "act",
            "--side",
            "left",
            "--expr",
            "e1",
            "--input",
            "-",
            "--format",
            "json",
            "--no-timing",
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"N":2,"terms":[{"word":[[1,2]],"coeff":{"0":"1"}}]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let p: QPolynomial = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(p, QPolynomial::generator(2, 1, 1).unwrap());
}

#[test]
fn output_is_reproducible() {
    let args = [
        "zonal",
        "--mu",
        "2",
        "--N",
        "4",
        "--compare",
        "--format",
        "json",
        "--no-timing",
    ];
    assert_eq!(qz(&args).stdout, qz(&args).stdout);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(qz(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(qz(&["detq"]).status.code(), Some(1));
    assert_eq!(qz(&["zonal", "--mu", "1,2", "--N", "4"]).status.code(), Some(1));
    let capped = Command::new(env!("CARGO_BIN_EXE_qz"))
        .args(["zonal", "--mu", "2", "--N", "4"])
        .env("QZ_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("exceeds cap"));
}
