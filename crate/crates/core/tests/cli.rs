use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bihom(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bihom")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn example_then_classify_reports_failure() {
    let dir = TempDir::new().unwrap();
    let o = bihom(dir.path(), &["example", "ex1", "--param", "lambda=1", "-o", "a.json"]);
    assert_eq!(code(&o), 0, "{o:?}");
    let o = bihom(dir.path(), &["classify", "a.json"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("bihom-associative          fail  witness [0, 1, 1] residual (4, 0)"));
}

#[test]
fn associated_akivis_workflow() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&bihom(dir.path(), &["example", "ex1", "--param", "lambda=1", "-o", "a.json"])), 0);
    assert_eq!(code(&bihom(dir.path(), &["construct", "associated-akivis", "a.json", "-o", "k.json"])), 0);
    let o = bihom(dir.path(), &["classify", "k.json", "--identities", "bihom-akivis"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = bihom(dir.path(), &["audit", "k.json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("violations: none"));
    let o = bihom(dir.path(), &["audit", "k.json", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn json_report_lists_witness_and_residual() {
    let dir = TempDir::new().unwrap();
    bihom(dir.path(), &["example", "ex1", "-o", "a.json"]);
    let o = bihom(dir.path(), &["classify", "a.json", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v["reports"].as_array().unwrap();
    let i2 = reports.iter().find(|r| r["code"] == "I2").unwrap();
    assert_eq!(i2["verdict"], "fail");
    assert_eq!(i2["witness"], serde_json::json!([0, 1, 1]));
    assert_eq!(i2["residual"], serde_json::json!(["4", "0"]));
    let i9 = reports.iter().find(|r| r["code"] == "I9").unwrap();
    assert_eq!(i9["verdict"], "not-applicable");
    assert_eq!(i9["reason"], "requires has-triple");
    assert!(i9.get("witness").is_none());
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    bihom(dir.path(), &["example", "octonions-hom", "-o", "o.json"]);
    let a = bihom(dir.path(), &["classify", "o.json", "--format", "json"]);
    let b = bihom(dir.path(), &["classify", "o.json", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&a), 1);
}

#[test]
fn zero_algebra_classifies_clean() {
    let dir = TempDir::new().unwrap();
    bihom(dir.path(), &["example", "zero", "--param", "dim=3", "-o", "z.json"]);
    let o = bihom(dir.path(), &["classify", "z.json", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for r in v["reports"].as_array().unwrap() {
        assert_ne!(r["verdict"], "fail");
        assert!(r.get("witness").is_none());
    }
}

#[test]
fn twist_commands() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    bihom(p, &["example", "akivis2d", "-o", "k.json"]);
    bihom(p, &["example", "r-map", "--param", "r=1", "-o", "r.json"]);
    bihom(p, &["example", "s-map", "--param", "s=2", "-o", "s.json"]);
    let o = bihom(p, &["twist", "k.json", "--alpha", "r.json", "--beta", "s.json", "-o", "t.json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let t = fs::read_to_string(p.join("t.json")).unwrap();
    assert!(t.contains("\"bihom-akivis-algebra\""));
    assert!(t.contains("\"18\""));
    assert_eq!(code(&bihom(p, &["classify", "t.json", "--identities", "I9,I20"])), 0);

    let o = bihom(p, &["twist-akivis", "t.json", "--phi", "r.json", "--psi", "s.json", "-o", "u.json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&bihom(p, &["classify", "u.json", "--identities", "bihom-akivis"])), 0);

    bihom(p, &["example", "cross3", "-o", "c.json"]);
    bihom(p, &["example", "rot-z", "-o", "rz.json"]);
    let o = bihom(p, &["twist", "c.json", "--alpha", "rz.json", "--beta", "rz.json", "-o", "cr.json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&bihom(p, &["classify", "cr.json", "--identities", "I6,I7"])), 0);
}

#[test]
fn twist_rejects_non_morphism() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    bihom(p, &["example", "akivis2d", "-o", "k.json"]);
    fs::write(p.join("swap.json"), r#"{"kind": "linear-map", "dim": 2, "matrix": [["0", "1"], ["1", "0"]]}"#).unwrap();
    let o = bihom(p, &["twist", "k.json", "--alpha", "swap.json", "--beta", "swap.json"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an endomorphism"));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    fs::write(p.join("empty.json"), "").unwrap();
    let o = bihom(p, &["validate", "empty.json"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error"));

    fs::write(
        p.join("bad.json"),
        r#"{"kind": "bihom-algebra", "dim": 2, "mu": [], "alpha": [["0","1"],["1","0"]], "beta": [["1","0"],["0","2"]]}"#,
    )
    .unwrap();
    let o = bihom(p, &["validate", "bad.json"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("alpha") && err.contains("beta"), "{err}");

    assert_eq!(code(&bihom(p, &["validate", "missing.json"])), 2);
    assert_eq!(code(&bihom(p, &["frobnicate"])), 2);
    assert_eq!(code(&bihom(p, &["classify", "--bogus"])), 2);
    assert_eq!(code(&bihom(p, &["example", "nope"])), 2);
    assert_eq!(code(&bihom(p, &["example", "ex1", "--param", "lambda=-1"])), 2);
    assert_eq!(code(&bihom(p, &["example", "ex1", "--param", "mu=1"])), 2);
}

#[test]
fn validate_and_help() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    bihom(p, &["example", "ex1", "-o", "a.json"]);
    let o = bihom(p, &["validate", "a.json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("regular: yes"));
    assert_eq!(code(&bihom(p, &["--help"])), 0);
    let o = bihom(p, &["example", "--list"]);
    assert!(stdout(&o).contains("octonions"));
}

#[test]
fn example_writes_to_stdout_without_output_flag() {
    let dir = TempDir::new().unwrap();
    let o = bihom(dir.path(), &["example", "ex1-alpha", "--param", "lambda=1/2"]);
    assert_eq!(code(&o), 0);
    let m = bihom::io::parse_linear_map(&stdout(&o)).unwrap();
    assert_eq!(m.get(0, 0), &bihom::linear::Rational::frac(3, 2));
}
