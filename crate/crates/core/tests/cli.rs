use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic-bounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), value)
}

#[test]
fn chars_degree_20() {
    let (code, v) = json(&["chars", "--degree", "20", "--sigma", "4"]);
    assert_eq!(code, 0);
    let entries = v["payload"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["character"], serde_json::json!([8, 7, 6, 5]));
    assert_eq!(entries[0]["genus"], 51);
    assert_eq!(entries[0]["maximal"], true);
}

#[test]
fn chars_trivial_and_infeasible() {
    let (code, v) = json(&["chars", "--degree", "3", "--sigma", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["entries"].as_array().unwrap().len(), 1);
    let (code, v) = json(&["chars", "--degree", "2", "--sigma", "4"]);
    assert_eq!(code, 0);
    assert!(v["payload"]["note"].is_string());
}

#[test]
fn chars_degree_23_gap() {
    let (_, v) = json(&["chars", "--degree", "23", "--sigma", "4"]);
    let e = v["payload"]["entries"].as_array().unwrap();
    assert_eq!(
        e[0]["genus"].as_i64().unwrap() - e[1]["genus"].as_i64().unwrap(),
        1
    );
}

#[test]
fn bounds_examples() {
    let (code, v) = json(&["bounds", "--all", "--assumption", "pg0"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["trace"]["outcome"]["degree_bound"], 23);
    let (_, v) = json(&["bounds", "--r", "0", "--assumption", "omega"]);
    assert_eq!(v["payload"]["trace"]["outcome"]["degree_bound"], 24);
    let (_, v) = json(&[
        "bounds",
        "--all",
        "--assumption",
        "omega",
        "--mu-cap",
        "81",
        "--jobs",
        "3",
    ]);
    assert_eq!(v["payload"]["trace"]["outcome"]["degree_bound"], 27);
    assert_eq!(v["verdict"]["exit_code"], 0);
}

#[test]
fn poly_rational_output() {
    let (code, v) = json(&[
        "poly", "--family", "phi", "--k", "7", "--delta", "0", "--r", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v["payload"]["value"],
        serde_json::json!({"numerator": 239, "denominator": 2})
    );
}

#[test]
fn verify_and_tamper() {
    let (code, v) = json(&["verify"]);
    assert_eq!(code, 0);
    let rows = v["payload"]["rows"].as_array().unwrap();
    assert!(rows.len() >= 25);
    let (code, v) = json(&["verify", "--tamper", "rho:1"]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = v["payload"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["pass"] == false)
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["rho_1(6)"]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bounds"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["bounds", "--all", "--assumption", "maybe"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["bounds", "--all", "--mu-cap", "300"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["bounds", "--all", "--jobs", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["poly", "--family", "psi", "--k", "3", "--delta", "0"])
            .status
            .code(),
        Some(2)
    );
    let (code, v) = json(&["frobnicate"]);
    assert_eq!(code, 2);
    assert_eq!(v["verdict"]["status"], "usage_error");
}

#[test]
fn smaller_mu_cap_still_derives() {
    let out = run(&["bounds", "--r", "2", "--mu-cap", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("d <= "), "{text}");
}

#[test]
fn text_output_is_default() {
    let out = run(&["genus", "--degree", "20", "--to", "23"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all routes agree"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn schema_subcommand_prints_json() {
    let out = run(&["schema"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["required"][0], "version");
}
