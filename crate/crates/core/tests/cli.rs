//! End-to-end tests of the command-line tool, including golden report files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stieltjes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[test]
fn verify_json_matches_golden() {
    let o = bin(&["verify", "--filter", "I-7.6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("verify_I-7.6.json"));
}

#[test]
fn verify_csv_matches_golden() {
    let o = bin(&["verify", "--filter", "I-7.19", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("verify_I-7.19.csv"));
}

#[test]
fn table_matches_golden() {
    let o = bin(&["table", "stieltjes", "--n", "1", "--grid", "0.1:0.9:9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text, golden("table_gamma1.csv"));
    assert_eq!(text.lines().count(), 10);
    let mid: Vec<f64> = text.lines().nth(5).unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(mid[0], 0.5);
    // oracle: mpmath.stieltjes(1, 0.5)
    assert!((mid[1] - -1.353_459_680_804_941_5).abs() < 1e-12);
}

#[test]
fn reports_are_byte_identical() {
    let a = bin(&["verify", "--filter", "I-8", "--plan", "smoke"]);
    let b = bin(&["verify", "--filter", "I-8", "--plan", "smoke"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_writes_file_and_summarizes() {
    let dir = std::env::temp_dir().join(format!("stieltjes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let o = bin(&["verify", "--filter", "I-7", "--plan", "smoke", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("total "));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    for key in ["tool_version", "context", "cases", "summary"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    let n = doc["cases"].as_array().unwrap().len();
    assert_eq!(doc["summary"]["total"].as_u64().unwrap() as usize, n);
    assert_eq!(doc["summary"]["failed"].as_u64(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn empty_filter_gives_empty_report() {
    let o = bin(&["verify", "--filter", "I-none"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(doc["cases"].as_array().unwrap().is_empty());
}

#[test]
fn failing_cases_exit_one() {
    let o = bin(&["verify", "--filter", "I-7.1", "--plan", "smoke", "--abel-eps0", "0.1", "--abel-levels", "4"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn eval_examples() {
    let o = bin(&["eval", "hurwitz_zeta_deriv", "--k", "0", "--s", "0", "--x", "0.3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).lines().next().unwrap().split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((v - 0.2).abs() < 1e-12);
    let o = bin(&["eval", "abel_trig_limit", "--j", "0", "--kind", "cos", "--x", "0.3"]);
    let v: f64 = stdout(&o).lines().next().unwrap().split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((v + 0.5).abs() < 1e-8);
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["eval", "stieltjes", "--n", "7"]).status.code(), Some(2));
    assert_eq!(bin(&["eval", "no_such_quantity"]).status.code(), Some(2));
    assert_eq!(bin(&["table", "stieltjes", "--grid", "1:2"]).status.code(), Some(2));
    assert_eq!(bin(&["eval", "stieltjes", "--abel-levels", "2"]).status.code(), Some(2));
    assert_eq!(bin(&["eval", "abel_trig_limit", "--j", "2", "--x", "0.3", "--abs-tol", "1e-30"]).status.code(), Some(3));
    let o = bin(&["verify", "--filter", "I-7.6", "--out", "/nonexistent-dir/r.json"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn constants_rows() {
    let o = bin(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for (name, tol) in [("zeta''(0,1/2)", 1e-9), ("logG(1/2)", 1e-8), ("gamma1(1/4)", 1e-8)] {
        let line = text.lines().find(|l| l.starts_with(name)).unwrap_or_else(|| panic!("no row {name}"));
        let residual: f64 = line[name.len()..].split_whitespace().nth(1).unwrap().parse().unwrap();
        assert!(residual <= tol, "{line}");
    }
}
