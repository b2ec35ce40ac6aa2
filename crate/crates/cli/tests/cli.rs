use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn qtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtwist")).args(args).output().expect("run qtwist")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = qtwist(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).expect("json output"))
}

#[test]
fn h3_pairing() {
    let o = qtwist(&["h3", "Z/2 + Z/2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("H^3(Γ; T) ≅ Z/2 + Z/2 + Z/2"), "{s}");
    assert!(s.contains("PASS"));

    let o = qtwist(&["h3", "Z/1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H^3(Γ; T) = 0"));

    let o = qtwist(&["h3", "Z/4"]);
    assert!(stdout(&o).contains("1 generator:"));
}

#[test]
fn classify_product_and_stdin() {
    let (code, v) = json(&["classify", "Z/2+Z/4", r#"{"product": [{"kind": "phi_ij", "i": 1, "j": 2, "power": 3}]}"#]);
    assert_eq!(code, 0);
    // φ_12 has order gcd(2, 4) = 2
    assert_eq!(v["e_ij"]["1,2"], 1);
    assert_eq!(v["e_i"], serde_json::json!([0, 0]));

    // table of the zero 3-cochain on Z/2, read from stdin
    let mut child = Command::new(env!("CARGO_BIN_EXE_qtwist"))
        .args(["classify", "Z/2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let zero = r#"{"table": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#;
    child.stdin.take().unwrap().write_all(zero.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("class:"));
}

#[test]
fn classify_rejects_non_cocycle() {
    let bad = r#"{"table": [[["1/2","0"],["0","0"]],[["0","0"],["0","0"]]]}"#;
    let (code, v) = json(&["classify", "Z/2", bad]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());
}

#[test]
fn theta_matches_closed_form() {
    let (code, v) = json(&["theta", "--type", "A2", "--tau", "1,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["su_n"]["closed_form"], 2);
    assert_eq!(v["su_n"]["match"], true);
}

#[test]
fn relations_su2() {
    let o = qtwist(&["relations", "--n", "2", "--tau", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("check: PASS"));
    assert!(s.contains("[determinant] v11 v22 + q v12 v21 = 1"));

    let (code, v) = json(&["relations", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["relation_count"], 37);

    let o = qtwist(&["--format", "latex", "relations", "--n", "2", "--tau", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("v_{11}"));
}

#[test]
fn relations_bad_input() {
    assert_eq!(qtwist(&["relations", "--n", "0"]).status.code(), Some(2));
    assert_eq!(qtwist(&["relations", "--n", "3", "--tau", "1"]).status.code(), Some(2));
    assert_eq!(qtwist(&["--format", "latex", "h3", "Z/2"]).status.code(), Some(2));
}

#[test]
fn qdet_and_spectrum() {
    let (code, _) = json(&["qdet-check", "--n", "3"]);
    assert_eq!(code, 0);
    let (code, v) = json(&["spectrum", "--n", "2", "--tau", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"][1]["image"][1], serde_json::json!(["1/2", "1/2"]));
}

#[test]
fn hopf_and_selftest() {
    let o = qtwist(&["hopf-check", "--type", "A1", "--q", "3/2", "--tau", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(qtwist(&["hopf-check", "--type", "A1", "--q", "1", "--tau", "1"]).status.code(), Some(2));
    let o = qtwist(&["selftest"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}
