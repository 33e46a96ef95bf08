use std::process::{Command, Output};

use serde_json::Value;

use logtan::exact::ZetaExpr;

fn logtan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logtan"))
        .args(args)
        .env_remove("LOGTAN_MAX_LEVELS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = logtan(&full);
    let v = serde_json::from_str(&stdout(&o)).expect("valid json");
    (v, o.status.code().unwrap())
}

const KEYS: [&str; 7] = ["command", "inputs", "exact", "numeric", "oracle", "delta", "checks"];

fn assert_schema(v: &Value) {
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    let mut want = KEYS.to_vec();
    want.sort_unstable();
    assert_eq!(keys, want);
    assert_eq!(v["delta"].is_null(), v["numeric"].is_null() || v["oracle"].is_null());
}

#[test]
fn exact_moments() {
    let o = logtan(&["exact", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("7/8 * zeta(3)"));
    assert!(text.contains("1.05179979026"));

    let (v, code) = json(&["exact", "0,0,1"]);
    assert_eq!(code, 0);
    assert_schema(&v);
    assert_eq!(v["exact"], "7/16 * pi * zeta(3)");
    assert!(v["delta"].as_f64().unwrap() < 1e-10);

    let (v, _) = json(&["exact", "5"]);
    assert_eq!(v["exact"], "0");
}

#[test]
fn exact_rendering_round_trips() {
    for spec in ["1/2,-3,0,2/7,1", "0,0,0,0,0,0,0,1", "-1,1/3"] {
        let (v, _) = json(&["exact", spec]);
        let rendered = v["exact"].as_str().unwrap();
        let parsed: ZetaExpr = rendered.parse().unwrap();
        assert_eq!(parsed.to_string(), rendered);
        assert!(v["delta"].as_f64().unwrap() < 1e-8, "{spec}");
    }
}

#[test]
fn scaled_variable() {
    // E₁(2x/π) = 2x/π − 1/2
    let (v, code) = json(&["exact", "-1/2,1", "--var", "scaled"]);
    assert_eq!(code, 0);
    assert_eq!(v["exact"], "7/4 * pi^-1 * zeta(3)");
}

#[test]
fn parse_errors_exit_2() {
    let o = logtan(&["exact", ""]);
    assert_eq!(o.status.code(), Some(2));
    let o = logtan(&["exact", "1,2/x"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("position"), "{err}");
    assert_eq!(logtan(&[]).status.code(), Some(2));
    assert_eq!(logtan(&["--format", "yaml", "exact", "1"]).status.code(), Some(2));
    assert_eq!(logtan(&["--tol", "1e-20", "exact", "0,1"]).status.code(), Some(2));
}

#[test]
fn project_sqrt() {
    let (v, code) = json(&["project", "sqrt", "--terms", "5"]);
    assert_eq!(code, 0);
    assert_schema(&v);
    let value = v["numeric"]["value"].as_f64().unwrap();
    assert!((value - 0.688_084_888_082).abs() < 1e-12);
    assert!((v["oracle"].as_f64().unwrap() - 0.689_247).abs() < 5e-6);
    assert!((v["delta"].as_f64().unwrap() - 1.16e-3).abs() < 5e-6);
    assert_eq!(v["numeric"]["coefficients"].as_array().unwrap().len(), 6);
}

#[test]
fn project_exact_cases() {
    let (v, _) = json(&["project", "x", "--terms", "1"]);
    assert!(v["delta"].as_f64().unwrap() < 1e-10);
    let (v, _) = json(&["project", "legendre2", "--terms", "4"]);
    assert!(v["numeric"]["value"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn unknown_function_lists_catalog() {
    let o = logtan(&["project", "tanh"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("sqrt") && err.contains("exp2z:Z"), "{err}");
}

#[test]
fn constants() {
    let (v, code) = json(&["constants", "zeta", "3"]);
    assert_eq!(code, 0);
    assert!((v["numeric"]["value"].as_f64().unwrap() - 1.202_056_903_159_594).abs() < 1e-14);
    let (v, _) = json(&["constants", "catalan"]);
    assert!((v["numeric"]["value"].as_f64().unwrap() - 0.915_965_594_1).abs() < 1e-10);
    let (v, _) = json(&["constants", "digamma", "0.5"]);
    let want = -0.577_215_664_901_532_9 - 2.0 * std::f64::consts::LN_2;
    assert!((v["numeric"]["value"].as_f64().unwrap() - want).abs() < 1e-13);
    assert_eq!(logtan(&["constants", "zeta", "1"]).status.code(), Some(2));
    assert_eq!(logtan(&["constants", "digamma", "-2"]).status.code(), Some(2));
    assert_eq!(logtan(&["constants", "digamma", "abc"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = logtan(&["verify", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.contains("PASS") && l.contains("L(x)=7/8 zeta(3)")));

    let o = logtan(&["verify", "constants"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.contains("PASS") && l.contains("psi(1/2) = -gamma - 2 log 2")));

    let (v, code) = json(&["verify", "series"]);
    assert_schema(&v);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "catalan_series N=10 = 0.914611602803"));
    let all_pass = checks.iter().all(|c| c["pass"] == true);
    assert_eq!(code, if all_pass { 0 } else { 1 });
}

#[test]
fn csv_has_fixed_header() {
    for args in [vec!["exact", "0,1"], vec!["verify", "constants"], vec!["constants", "catalan"]] {
        let mut full = vec!["--format", "csv"];
        full.extend(args);
        let text = stdout(&logtan(&full));
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
        assert_eq!(header, ["command", "item", "value", "expected", "tolerance", "pass"]);
        assert!(reader.records().all(|r| r.unwrap().len() == 6));
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = logtan(&["--format", "json", "--out", path.to_str().unwrap(), "exact", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["exact"], "7/8 * zeta(3)");
}

#[test]
fn max_levels_env_caps_refinement() {
    let o = Command::new(env!("CARGO_BIN_EXE_logtan"))
        .args(["--format", "json", "quad", "sqrt"])
        .env("LOGTAN_MAX_LEVELS", "2")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checks"][0]["pass"], false);
    assert_eq!(o.status.code(), Some(1));

    let (v, code) = json(&["quad", "logtan"]);
    assert_eq!(code, 0);
    assert!(v["delta"].as_f64().unwrap() < 1e-10);
}
