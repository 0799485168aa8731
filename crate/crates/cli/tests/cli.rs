use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn uqsl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqsl")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("uqsl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Drops timing fields so reports can be compared.
fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("wall_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn smallest_forward_theorem_is_proved() {
    let out = uqsl(&["verify", "--n", "0", "--m", "1", "--suite", "theorem_fwd"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["exit_code"], 0);
    let checks = r["suites"][0]["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "ProvedZero"));
    assert_eq!(r["summary"]["proved_zero"], checks.len());
}

#[test]
fn injected_fault_fails() {
    let out = uqsl(&["verify", "--n", "1", "--m", "1", "--suite", "eq51", "--check", "broken=e1 f1 - f1 e1"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let extra = r["suites"].as_array().unwrap().last().unwrap();
    assert_eq!(extra["suite"], "extra");
    assert_eq!(extra["checks"][0]["label"], "broken");
    assert_eq!(extra["checks"][0]["status"], "Failed");
    assert_eq!(r["summary"]["failed"], 1);
}

#[test]
fn true_extra_check_is_proved() {
    let out = uqsl(&["verify", "--n", "1", "--m", "1", "--suite", "eq51", "--check", "br(am1, ap1) - [1/(q-qbar)] (L1 - Lb1)"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["suites"][1]["checks"][0]["label"], "check1");
    assert_eq!(r["suites"][1]["checks"][0]["status"], "ProvedZero");
}

#[test]
fn cartan_matrix_is_embedded() {
    let out = uqsl(&["verify", "--n", "2", "--m", "5", "--suite", "cartan_only"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let c = r["suites"][0]["cartan_matrix"].as_array().unwrap();
    assert_eq!(c.len(), 7);
    assert_eq!(c[0], serde_json::json!([2, -1, 0, 0, 0, 0, 0]));
    // the odd simple root sits at index n + 1
    assert_eq!(c[2], serde_json::json!([0, -1, 0, 1, 0, 0, 0]));
}

#[test]
fn fock_module_lists_states() {
    let out = uqsl(&["fock", "--n", "1", "--m", "1", "--order-p", "1", "--epsilons", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["dimension"], 3);
    assert_eq!(r["module"]["basis"], serde_json::json!([[0, 0], [0, 1], [1, 0]]));
    assert_eq!(r["module"]["spectrum"], serde_json::json!(["0", "1", "1"]));
    assert_eq!(r["ladder"]["holds"], true);
    assert_eq!(r["supercommutation"]["holds"], true);
}

#[test]
fn zero_energies_are_accepted() {
    let out = uqsl(&["fock", "--n", "1", "--m", "1", "--epsilons", "0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["module"]["spectrum"], serde_json::json!(["0", "0", "0"]));
}

#[test]
fn energy_constraint_violation() {
    let out = uqsl(&["fock", "--n", "1", "--m", "1", "--epsilons", "1,2"]);
    assert_eq!(out.status.code(), Some(65));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Σ (−1)^θ_i ε_i = 0"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors() {
    let path = scratch("malformed.json");
    std::fs::write(&path, "{\"n\": 1, \"m\": ").unwrap();
    let out = uqsl(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(64));
    std::fs::write(&path, r#"{"n": 1, "m": 1, "colour": "red"}"#).unwrap();
    assert_eq!(uqsl(&["verify", "--config", path.to_str().unwrap()]).status.code(), Some(64));
    assert_eq!(uqsl(&["verify", "--n", "1"]).status.code(), Some(64));
    assert_eq!(uqsl(&["verify", "--n", "0", "--m", "0"]).status.code(), Some(64));
    assert_eq!(uqsl(&["verify", "--n", "1", "--m", "0", "--suite", "nope"]).status.code(), Some(64));
    assert_eq!(uqsl(&["verify", "--n", "1", "--m", "0", "--deformed", "false", "--suite", "prop2"]).status.code(), Some(64));
    assert_eq!(uqsl(&["verify", "--frobnicate"]).status.code(), Some(64));
    assert_eq!(uqsl(&["fock", "--n", "1", "--m", "1", "--epsilons", "1"]).status.code(), Some(64));
}

#[test]
fn config_file_with_flag_override() {
    let cfg = scratch("run.json");
    let out = scratch("report.json");
    std::fs::write(&cfg, r#"{"n": 1, "m": 0, "suites": ["prop3"], "format": "text"}"#).unwrap();
    let res = uqsl(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--m",
        "1",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(0));
    assert!(res.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["config"]["n"], 1);
    assert_eq!(r["config"]["m"], 1);
    assert_eq!(r["config"]["suites"], serde_json::json!(["prop3"]));
    assert_eq!(r["engine_version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn classical_defaults() {
    let out = uqsl(&["verify", "--n", "1", "--m", "1", "--deformed", "false"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["config"]["suites"], serde_json::json!(["rep_validation", "prop1_classical", "span_check"]));
}

#[test]
fn output_is_deterministic_up_to_timing() {
    let args = ["verify", "--n", "1", "--m", "1", "--suite", "prop2", "--suite", "eq51"];
    let mut a = json(&uqsl(&args));
    let mut b = json(&uqsl(&args));
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(a, b);
}

#[test]
fn text_format() {
    let out = uqsl(&["verify", "--n", "0", "--m", "1", "--suite", "theorem_fwd", "--format", "text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("suite theorem_fwd (9 checks, 100.0% proved)"), "{s}");
    assert!(s.lines().last().unwrap().ends_with("0 failed"));
}
