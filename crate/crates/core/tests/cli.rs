use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn riesz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riesz")).args(args).env_remove("RIESZ_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("riesz-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_exit_codes() {
    let o = riesz(&["verify", "--space", "fin:3", "--cases", "1000", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ok: "));
    let o = riesz(&["verify", "--space", "lex", "--cases", "1000", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("non-Archimedean: witness (0,1)"));
    let o = riesz(&["verify", "--space", "fin:0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fin:0"));
    assert_eq!(riesz(&["verify", "--space", "pl", "--cases", "0"]).status.code(), Some(2));
    assert_eq!(riesz(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let o = riesz(&["verify", "--space", "lex", "--cases", "50", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["archimedean"], false);
    assert_eq!(v["infinitesimal"]["epsilon"], serde_json::json!(["0", "1"]));
    assert_eq!(v["laws"].as_array().unwrap().len(), 20);
}

#[test]
fn spectrum_and_roundtrip() {
    let o = riesz(&["spectrum", "--space", "fin:3", "--unit", r#"["1","2","4"]"#, "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1/2", "1/4"]));
    assert_eq!(v["spectrum"][2], serde_json::json!({"index": 2, "coeff": "1/4"}));
    let o = riesz(&["roundtrip", "--space", "fin:4", "--unit", "ones"]);
    assert_eq!(stdout(&o), "CΦ≅id: ok, ΦC≅id: ok\n");
    // A zero coordinate is not a unit.
    let o = riesz(&["roundtrip", "--space", "fin:2", "--unit", r#"["1","0"]"#]);
    assert_eq!(o.status.code(), Some(4));
    let o = riesz(&["spectrum", "--space", "fin:2", "--unit", r#"["1","2","3"]"#]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn decompose_and_norm() {
    let o = riesz(&[
        "decompose",
        "--space",
        "lex",
        "--x",
        r#"["1","5"]"#,
        "--a",
        r#"["1","0"]"#,
        "--b",
        r#"["0","7"]"#,
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["a_prime"], serde_json::json!(["1", "0"]));
    assert_eq!(v["b_prime"], serde_json::json!(["0", "5"]));
    let o = riesz(&[
        "norm",
        "--space",
        "pl",
        "--x",
        r#"{"t":["0","1"],"v":["0","1"]}"#,
        "--unit",
        r#"{"t":["0","1"],"v":["1","2"]}"#,
    ]);
    assert_eq!(stdout(&o), "1/2\n");
    let o = riesz(&["norm", "--space", "pl", "--x", r#"{"t":["0","1"],"v":["0"]}"#]);
    assert_eq!(o.status.code(), Some(2));
    let o = riesz(&["norm", "--space", "fin:2", "--x", r#"["1","1/0"]"#]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn approx_writes_expression() {
    let dir = scratch("approx");
    let target = dir.join("t2.json");
    let values: Vec<String> = (0..=10i64).map(|k| riesz::Rational::new(k * k, 100).to_string()).collect();
    std::fs::write(&target, serde_json::json!({ "values": values }).to_string()).unwrap();
    let out = dir.join("expr.json");
    let o = riesz(&[
        "approx",
        "--grid",
        "11",
        "--target",
        target.to_str().unwrap(),
        "--gens",
        "unital-affine",
        "--eps",
        "1/10",
        "--out",
        out.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let err: riesz::Rational = v["error"].as_str().unwrap().parse().unwrap();
    assert!(err <= riesz::Rational::new(1, 10));
    let expr: riesz::approx::LatticeExpr = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    expr.validate(2).unwrap();

    // Wrong number of samples for the grid.
    let o = riesz(&["approx", "--grid", "5", "--target", target.to_str().unwrap(), "--eps", "1/10"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(
        riesz(&["approx", "--grid", "11", "--target", "/nonexistent.json", "--eps", "1"]).status.code(),
        Some(2)
    );

    // Continuum mode on a PL target whose grid is too coarse.
    let pl = dir.join("pl.json");
    std::fs::write(&pl, r#"{"t":["0","1/2","1"],"v":["1","2","1"]}"#).unwrap();
    let o = riesz(&["approx", "--grid", "3", "--target", pl.to_str().unwrap(), "--eps", "1/100", "--continuum"]);
    assert_eq!(o.status.code(), Some(4));
    let o = riesz(&["approx", "--grid", "11", "--target", target.to_str().unwrap(), "--eps", "1", "--continuum"]);
    assert_eq!(o.status.code(), Some(2));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn seed_from_environment() {
    let args = ["verify", "--space", "pl", "--cases", "20", "--seed", "1", "--format", "json"];
    let with_env =
        |s: &str| Command::new(env!("CARGO_BIN_EXE_riesz")).args(args).env("RIESZ_SEED", s).output().unwrap();
    let v: Value = serde_json::from_slice(&with_env("77").stdout).unwrap();
    assert_eq!(v["seed"], 77);
    assert_eq!(with_env("-3").status.code(), Some(2));
}

#[test]
fn laws_list_and_help() {
    let o = riesz(&["laws-list"]);
    assert_eq!(stdout(&o).lines().count(), 22);
    assert!(stdout(&o).starts_with("x ∨ y = y ∨ x") || !stdout(&o).is_empty());
    assert_eq!(riesz(&["--help"]).status.code(), Some(0));
}
