//! End-to-end pipeline through the binary: group -> cohomology ->
//! algebra -> twist/partition/canon -> lift, plus exit-code contracts.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn gfrob() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gfrob"))
}

fn run_ok(args: &[&str]) -> String {
    let out = gfrob().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "expected success for {args:?}\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    gfrob().args(args).output().unwrap().status.code().unwrap()
}

fn path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

const K4: &str = "product(cyclic 2, cyclic 2)";

#[test]
fn pipeline_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let h2 = path(d, "h2.json");
    let alpha = path(d, "alpha.json");
    let k4 = path(d, "k4.json");
    let tk4 = path(d, "tk4.json");

    // cohomology: the Klein four-group has two twist classes
    run_ok(&["h2", "--group", K4, "--schur", "--out", h2.to_str().unwrap()]);
    let classes: Value = serde_json::from_str(&std::fs::read_to_string(&h2).unwrap()).unwrap();
    assert_eq!(classes["order"], 2);
    let rep = classes["representatives"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| !r["values"].as_array().unwrap().is_empty())
        .expect("a nontrivial representative")
        .clone();
    std::fs::write(&alpha, serde_json::to_string(&rep).unwrap()).unwrap();

    // build both algebras and check them
    run_ok(&["gfa", "build", "--group", K4, "--out", k4.to_str().unwrap()]);
    run_ok(&[
        "gfa", "build", "--group", K4,
        "--alpha", alpha.to_str().unwrap(),
        "--out", tk4.to_str().unwrap(),
    ]);
    let check = run_ok(&["gfa", "check", "--in", tk4.to_str().unwrap()]);
    assert!(check.contains("PASS  yetter-drinfeld"));
    assert!(!check.contains("FAIL"));

    // partition totals distinguish the twist
    let p_plain = run_ok(&["gfa", "partition", "--in", k4.to_str().unwrap()]);
    assert!(p_plain.contains("total = 16"));
    let p_twisted = run_ok(&["gfa", "partition", "--in", tk4.to_str().unwrap()]);
    assert!(p_twisted.contains("total = 4"));

    // so do canonical forms
    assert!(run_ok(&["gfa", "canon", "--in", k4.to_str().unwrap()]).contains("class trivial"));
    assert!(run_ok(&["gfa", "canon", "--in", tk4.to_str().unwrap()]).contains("class nontrivial"));

    // twisting the plain ring matches building the twisted one
    let tw = path(d, "tw.json");
    run_ok(&[
        "gfa", "twist", "--in", k4.to_str().unwrap(),
        "--alpha", alpha.to_str().unwrap(),
        "--out", tw.to_str().unwrap(),
    ]);
    let a: Value = serde_json::from_str(&std::fs::read_to_string(&tw).unwrap()).unwrap();
    let b: Value = serde_json::from_str(&std::fs::read_to_string(&tk4).unwrap()).unwrap();
    assert_eq!(a, b);

    // the lifting diagrams pass for both kernel characters
    for chi in ["0", "1"] {
        let out = run_ok(&[
            "ext", "lift",
            "--algebra", k4.to_str().unwrap(),
            "--cocycle", alpha.to_str().unwrap(),
            "--chi", chi,
        ]);
        assert!(out.contains("PASS  pushdown equals the alpha-twist"));
    }

    // exit code 2 on bad input
    assert_eq!(exit_code(&["group", "make", "--spec", "nonsense 3"]), 2);
    assert_eq!(exit_code(&["gfa", "check", "--in", path(d, "missing.json").to_str().unwrap()]), 2);

    // exit code 1 on failed checks: corrupt one structure constant
    let mut broken: Value = serde_json::from_str(&std::fs::read_to_string(&tk4).unwrap()).unwrap();
    broken["mult"][0][5]["coeffs"][0][0] = Value::String("2".into());
    let bad = path(d, "bad.json");
    std::fs::write(&bad, serde_json::to_string(&broken).unwrap()).unwrap();
    assert_eq!(exit_code(&["gfa", "check", "--in", bad.to_str().unwrap()]), 1);
}

#[test]
fn json_report_carries_input_hashes() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = path(dir.path(), "k4.json");
    run_ok(&["gfa", "build", "--group", K4, "--out", k4.to_str().unwrap()]);
    let out = run_ok(&["--format", "json", "gfa", "check", "--in", k4.to_str().unwrap()]);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert!(report["outcome"]["axioms"]["checks"].as_array().unwrap().len() > 5);
}

#[test]
fn verify_all_parallel() {
    let out = run_ok(&["--jobs", "4", "verify-all"]);
    assert_eq!(out.matches("PASS").count(), 8);
    assert!(!out.contains("FAIL"));
}
