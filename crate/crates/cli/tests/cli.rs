use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn quintic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintic")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = quintic(args);
    let json = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: bad JSON ({e}); stderr: {}", String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), json)
}

fn poly(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/polys").join(name).display().to_string()
}

#[test]
fn dims_single_type_over_q() {
    let (code, r) = report(&["dims", "--type", "4", "--field", "qq", "--seeds", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"].as_array().unwrap().len(), 1);
    assert_eq!(r["results"][0]["computed"], "11");
}

#[test]
fn dims_type_42_default_field() {
    let (code, r) = report(&["dims", "--type", "42"]);
    assert_eq!(code, 0);
    assert_eq!(r["output"]["samples"], 20);
    assert!(r["results"].as_array().unwrap().iter().all(|c| c["computed"] == "0"));
}

#[test]
fn dims_rejects_bad_input() {
    assert_eq!(quintic(&["dims", "--field", "fp:65519"]).status.code(), Some(2));
    assert_eq!(quintic(&["dims", "--type", "43"]).status.code(), Some(2));
    assert_eq!(quintic(&["dims", "--type", "x"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["dims", "--type", "all", "--seeds", "2", "--seed", "7"];
    let a = quintic(&args).stdout;
    let b = quintic(&args).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn report_to_file() {
    let dir = std::env::temp_dir().join(format!("quintic-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ledger.json");
    let out = quintic(&["ledger", "--dataset", "ss2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["output"]["expanded"], "t^4+3t^5+3t^6+t^7");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn classify_examples() {
    for (file, expect, class) in [
        ("fermat.txt", "nonsingular", "nonsingular"),
        ("two-lines.txt", "31", "type 31"),
        ("line-and-node.txt", "17", "type 17"),
    ] {
        let (code, r) = report(&["classify", "--poly", &poly(file), "--field", "fp:11", "--expect", expect]);
        assert_eq!(code, 0, "{file}: {r}");
        assert_eq!(r["output"]["classification"], class);
    }
}

#[test]
fn classify_wrong_expectation_fails() {
    let (code, r) = report(&["classify", "--poly", "x^2*y^2*z", "--field", "fp:11", "--expect", "30"]);
    assert_eq!(code, 1);
    assert_eq!(r["output"]["dim_l"], 3);
}

#[test]
fn classify_input_errors() {
    // characteristic dividing the degree
    assert_eq!(quintic(&["classify", "--poly", "x^5+y^5+z^5", "--field", "fp:5"]).status.code(), Some(2));
    assert_eq!(quintic(&["classify", "--poly", "x^5+y", "--field", "fp:11"]).status.code(), Some(2));
    assert_eq!(quintic(&["classify", "--poly", "x^5", "--field", "qq"]).status.code(), Some(2));
    assert_eq!(quintic(&["classify", "--poly", "x^5", "--field", "fp:65521"]).status.code(), Some(2));
}

#[test]
fn ledger_datasets() {
    for (name, expanded) in [
        ("quintic5", "1+t+t^3+t^4+t^5+t^6+t^8+t^9"),
        ("ss2", "t^4+3t^5+3t^6+t^7"),
        ("ss7", "0"),
        ("ssx", "t^5+2t^6+t^7"),
    ] {
        let (code, r) = report(&["ledger", "--dataset", name]);
        assert_eq!(code, 0, "{name}: {r}");
        assert_eq!(r["output"]["expanded"], expanded, "{name}");
    }
}

#[test]
fn ledger_tables() {
    let (code, r) = report(&["ledger", "--dataset", "quintic5", "--emit", "tables"]);
    assert_eq!(code, 0);
    assert_eq!(r["output"]["table"].as_array().unwrap().len(), 7);
    assert_eq!(r["output"]["limit_table"], r["output"]["table"]);
    assert_eq!(r["output"]["column_totals"][0]["total"], "t^36+t^38+t^40");
    assert_eq!(r["output"]["total"], "t^32+t^33+t^35+t^36+t^37+t^38+t^40");
    assert!(r["output"]["grid"].as_str().unwrap().contains("R^1"));
}

#[test]
fn ledger_unknown_dataset() {
    let (code, r) = report(&["ledger", "--dataset", "nope"]);
    assert_eq!(code, 2);
    assert!(r["error"].as_str().unwrap().contains("quintic5"));
}

#[test]
fn homology_builtin_models() {
    for (model, dual) in [("prop-b-a1", "t^2+t^3"), ("prop-b-a2", "0"), ("prop-b-a3", "t^2+t^3"), ("prop-c", "t")] {
        for field in ["qq", "fp:7"] {
            let (code, r) = report(&["homology", "--model", model, "--field", field]);
            assert_eq!(code, 0, "{model} over {field}: {r}");
            assert_eq!(r["output"]["dual"], dual);
        }
    }
}

#[test]
fn homology_model_file() {
    let dir = std::env::temp_dir().join(format!("quintic-model-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("circle.json");
    std::fs::write(
        &good,
        r#"{"name": "circle", "cells": [["v"], ["e"]], "edges": [["v", "v"]], "monodromy": ["2"],
            "expect": {"betti": [0, 0]}}"#,
    )
    .unwrap();
    let (code, r) = report(&["homology", "--model", good.to_str().unwrap()]);
    assert_eq!(code, 0, "{r}");
    let (code, _) = report(&["homology", "--model", good.to_str().unwrap(), "--field", "fp:5"]);
    assert_eq!(code, 0);

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"name": "bad", "cells": [["v"], ["e"]], "edges": [["v", "w"]], "monodromy": ["1"]}"#).unwrap();
    assert_eq!(quintic(&["homology", "--model", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(quintic(&["homology", "--model", "no-such-model"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}
