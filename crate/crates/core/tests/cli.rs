//! End-to-end runs of the `toda-psi` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toda-psi"))
        .args(args)
        .output()
        .unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn psi_table_symbolic_and_numeric() {
    let o = run(&["psi-table", "--curve", "a1", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 5);
    assert_eq!(v[2]["display"], "(-2)*y");
    let o = run(&["psi-table", "--curve", "symbolic", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn eval_at_the_node_point() {
    let o = run(&[
        "eval",
        "--curve",
        "a3",
        "--expr",
        "psi4",
        "--point",
        r#"{"kind":"generic","x":"-1"}"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["value"]["b"], "-2");
    assert_eq!(v["value"]["r"], "-3/4");
}

#[test]
fn psi_check_flags_listing_mismatch() {
    assert_eq!(
        run(&["psi-check", "--curve", "a3", "--max-n", "8", "--bk", "5"])
            .status
            .code(),
        Some(0)
    );
    let o = run(&["psi-check", "--curve", "a2", "--max-n", "6", "--bk", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!json(&o)["listing"]["mismatches"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn val_table_at_branch_point() {
    let o = run(&[
        "val-table",
        "--curve",
        "a2",
        "--point",
        r#"{"kind":"branch","b":"0"}"#,
        "--max-n",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let g: Vec<String> = json(&o)["g"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["val"].to_string())
        .collect();
    assert_eq!(g, ["\"inf\"", "0", "1", "0", "1", "0", "1"]);
}

#[test]
fn dtoda_grid_and_verify() {
    let pt = r#"{"kind":"generic","x":"-1"}"#;
    let o = run(&[
        "dtoda-grid",
        "--curve",
        "a3",
        "--point",
        pt,
        "--pq",
        "3,2",
        "--kind",
        "u",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["grid"]["rows"][0][0], "inf");
    let o = run(&[
        "dtoda-verify",
        "--curve",
        "a1",
        "--point",
        r#"{"kind":"generic","x":"2"}"#,
        "--pq",
        "5,2",
        "--n0",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ok"], true);
}

#[test]
fn utoda_grid_csv() {
    let fac = r#"{"kind":"branch","factor":["1/4","0","0","1"]}"#;
    let o = run(&[
        "utoda-grid",
        "--curve",
        "a1",
        "--point",
        fac,
        "--pq",
        "3,2",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().nth(1).unwrap(), "0,inf,-2,2,-2,2");
}

#[test]
fn utoda_evolve_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("evolve.json");
    let o = run(&[
        "utoda-evolve",
        "--rows",
        "[[0,1,0,0],[0,0,1,0]]",
        "--d",
        "-1",
        "--steps",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn curve_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.json");
    std::fs::write(&path, r#"{"genus":1,"lambda":["0","-1","0"]}"#).unwrap();
    let arg = format!("@{}", path.display());
    let o = run(&["psi-table", "--curve", &arg, "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn genus_two_commands() {
    let o = run(&[
        "g2-add",
        "--curve",
        "g2",
        "--divisors",
        r#"[{"u":["0","1"],"v":["1"]},{"u":["-1","1"],"v":["1"]}]"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let d = json(&o);
    assert_eq!(d["u"], serde_json::json!(["0", "-1", "1"]));
    let div = serde_json::to_string(&d).unwrap();
    let o = run(&["g2-wp", "--curve", "g2", "--divisor", &div]);
    assert_eq!(o.status.code(), Some(0));
    let w = json(&o);
    assert_eq!(
        (w["wp12"].as_str(), w["wp22"].as_str()),
        (Some("0"), Some("1"))
    );
}

#[test]
fn analytic_check_reports_failure_at_tight_tolerance() {
    let o = run(&[
        "analytic-check",
        "--curve",
        r#"{"genus":1,"lambda":["0","-1","0"]}"#,
        "--samples",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&[
        "analytic-check",
        "--curve",
        r#"{"genus":1,"lambda":["0","-1","0"]}"#,
        "--samples",
        "5",
        "--tol-toda",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(
        run(&["eval", "--curve", r#"{"genus":1}"#, "--expr", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["eval", "--curve", "a1", "--expr", "psi("])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["psi-table", "--curve", "@/nonexistent/curve.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    let o = run(&[
        "g2-wp",
        "--curve",
        "g2",
        "--divisor",
        r#"{"u":["2","-3","1"],"v":["0"]}"#,
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_toda-psi"))
        .args(["psi-table", "--curve", "a1", "--max-n", "10"])
        .env("TODA_PSI_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reproduce_reports_items() {
    let o = run(&["reproduce-paper"]);
    let v = json(&o);
    let items = v["items"].as_array().unwrap();
    assert_eq!(items.len(), 14);
    let pass = items.iter().filter(|i| i["status"] == "pass").count();
    let code = if pass == items.len() { 0 } else { 1 };
    assert_eq!(o.status.code(), Some(code));
    assert_eq!(v["overall"], if code == 0 { "pass" } else { "fail" });
}
