use std::process::{Command, Output};

use serde_json::Value;

fn qexpand(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qexpand")).args(args).output().expect("run qexpand")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = qexpand(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (out.status.code().unwrap(), v)
}

#[test]
fn inverse_matrix_entry() {
    let (code, v) = json(&["matrix", "--which", "B", "--n", "3", "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 3);
    assert_eq!(v["entries"][2][1], "a - b");
    assert_eq!(v["entries"][3].as_array().unwrap().len(), 4);
}

#[test]
fn trivial_matrix() {
    let (code, v) = json(&["matrix", "--which", "A", "--n", "0", "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["entries"], serde_json::json!([["1"]]));
}

#[test]
fn malformed_literal_is_a_usage_error() {
    let out = qexpand(&["matrix", "--a", "(("]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    assert!(out.stdout.is_empty());
}

#[test]
fn extra_symbols_are_declared_on_use() {
    let (code, v) = json(&["matrix", "--which", "B", "--n", "2", "--a", "t*q", "--b", "s", "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["entries"][2][1], "q*t - s");
}

#[test]
fn coogan_ono_builtin_gives_ones() {
    let (code, v) = json(&["expand", "--builtin", "coogan_ono", "--a", "1", "--b", "-q", "--n", "12", "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["agree"], true);
    let c = v["triangular"].as_array().unwrap();
    assert_eq!(c.len(), 13);
    assert!(c.iter().all(|x| x == "1"));
    assert_eq!(v["theorem15"], v["triangular"]);
}

#[test]
fn constant_and_unit_expansions() {
    let (_, v) = json(&["expand", "--coeffs", "1", "--n", "5", "--output", "json"]);
    assert_eq!(v["triangular"], serde_json::json!(["1", "0", "0", "0", "0", "0"]));
    let (code, v) = json(&["expand", "--builtin", "basek", "--k", "3", "--n", "5", "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["theorem15"], serde_json::json!(["0", "0", "0", "1", "0", "0"]));
    assert_eq!(qexpand(&["expand", "--builtin", "basek", "--k", "7", "--n", "5"]).status.code(), Some(2));
    assert_eq!(qexpand(&["expand", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn gn_values() {
    let (code, v) = json(&["gn", "--n", "3", "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["g"], serde_json::json!(["1", "-q + 1", "q^3 - 2*q^2 + 1"]));
    assert_eq!(v["specialization_holds"], true);
}

#[test]
fn verify_single_check() {
    let (code, v) = json(&["verify", "rogers_fine", "--n", "6", "--output", "json"]);
    assert_eq!(code, 0);
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 1);
    assert_eq!(arr[0]["name"], "rogers_fine");
    assert_eq!(arr[0]["passed"], true);
    assert_eq!(arr[0]["first_failure"], Value::Null);
}

#[test]
fn unknown_check_lists_names() {
    let out = qexpand(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("nosuch") && err.contains("rogers_fine") && err.contains("partial_theta"));
}

#[test]
fn numeric_verify_points_file() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let good = dir.join("rf_points.json");
    std::fs::write(&good, r#"[{"q": "0.1", "a": "0.3", "b": "0.5", "z": "0.2"}]"#).unwrap();
    let (code, v) = json(&["numeric-verify", "--identity", "rogers_fine", "--points", good.to_str().unwrap(), "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["status"], "passed");

    let outside = dir.join("rf_outside.json");
    std::fs::write(&outside, r#"[{"q": "0.1", "a": "0.3", "b": "0.5", "z": "1.5"}]"#).unwrap();
    assert_eq!(qexpand(&["numeric-verify", "--identity", "rogers_fine", "--points", outside.to_str().unwrap()]).status.code(), Some(2));

    let qqq = dir.join("qqq_points.json");
    std::fs::write(&qqq, r#"[{"m": 2, "q": "1/3"}]"#).unwrap();
    let (code, v) = json(&["numeric-verify", "--identity", "qqq", "--points", qqq.to_str().unwrap(), "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn tight_tolerance_fails_with_exit_one() {
    let out = qexpand(&["numeric-verify", "--identity", "lemma13", "--tol", "1e-60"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn output_is_newline_terminated() {
    for args in [&["gn", "--n", "2"][..], &["gn", "--n", "2", "--output", "json"][..], &["matrix", "--n", "1"][..]] {
        let out = qexpand(args);
        assert_eq!(out.stdout.last(), Some(&b'\n'), "{args:?}");
    }
}
