use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_koszulkit"));
    c.env_remove("KOSZULKIT_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

#[test]
fn verify_lemma2_succeeds() {
    let out = run(&["verify", "lemma2", "--s", "3", "--t", "3", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["total"], 450);
    assert!(v.get("smallest_failure").is_none());
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["status"] == "equal"));
}

#[test]
fn verify_thm4_on_a_file() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "sys.txt", "vars: x\nf: x^2\n");
    let out = run(&["verify", "thm4", "--file", &sys]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r["status"] == "equal"));
}

#[test]
fn verify_thm3_rejects_inconsistent_cofactors() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "bad.txt", "vars: x\nf: x^2\nF: x^3\nG: [[x^2]]\n");
    let out = run(&["verify", "thm3", "--file", &sys]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("precondition"));
}

#[test]
fn verify_thm3_on_a_consistent_file() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "ok.txt", "vars: x1 x2\nf: x1, x2\nF: x1^2, x2^2\nG: [[x1, 0], [0, x2]]\n");
    let out = run(&["verify", "thm3", "--file", &sys]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["summary"]["not_found"], 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "lemma9"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "sys.txt", "vars: x\nf: x^2\n");
    assert_eq!(run(&["verify", "lemma1", "--file", &sys]).status.code(), Some(2));
    let broken = write(&dir, "broken.txt", "vars: x\nf: x^^2\n");
    let out = run(&["groebner", &broken]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
    assert_eq!(run(&["groebner", "/nonexistent/sys.txt"]).status.code(), Some(2));
}

#[test]
fn dual_element_reports() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "diag.txt", "vars: x1 x2\nf: x1, x2\n");
    let report = dir.path().join("r.json");
    let out = run(&["dual-element", &sys, "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["status"], "equal");
    assert_eq!(v["pairing_value"], "(1)");
    for l in v["certificate"]["functionals"].as_array().unwrap() {
        assert_eq!(l["initials"], serde_json::json!(["1"]));
    }
    assert_eq!(std::fs::read(&report).unwrap(), out.stdout);

    let sys = write(&dir, "sq.txt", "vars: x\nf: x^2\n");
    let v = json(&run(&["dual-element", &sys]));
    assert_eq!(v["certificate"]["annihilators"][0]["t"], "x^2");
    assert_eq!(v["certificate"]["functionals"][0]["initials"], serde_json::json!(["0", "1"]));
    assert_eq!(v["certificate"]["cocycle"], true);

    let sys = write(&dir, "mono.txt", "vars: x1 x2\nf: x1*x2\n");
    let out = run(&["dual-element", &sys]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero-dimensional"));
}

#[test]
fn pair_values() {
    let dir = TempDir::new().unwrap();
    let lin = write(&dir, "lin.txt", "vars: x\nf: x\n");
    let sq = write(&dir, "sq.txt", "vars: x\nf: x^2\n");
    for (file, h, expected) in [(&lin, "1", "1"), (&sq, "x", "1"), (&sq, "x^2", "0"), (&sq, "3*x + 5", "3")] {
        let out = run(&["pair", file, "--poly", h]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["l"], expected, "l({h})");
        assert_eq!(v["e"][0]["multiplier"], expected, "e({h})");
    }
    assert_eq!(run(&["pair", &sq, "--poly", "y"]).status.code(), Some(2));
}

#[test]
fn groebner_report() {
    let dir = TempDir::new().unwrap();
    let sys = write(&dir, "g.txt", "vars: x1 x2\nf: x1^2 - x2, x2^2\norder: lex\n");
    let v = json(&run(&["groebner", &sys]));
    assert_eq!(v["order"], "lex");
    assert_eq!(v["zero_dimensional"], true);
    assert_eq!(v["quotient_basis"].as_array().unwrap().len(), 4);

    let sys = write(&dir, "m.txt", "vars: x1 x2\nf: x1*x2\n");
    let out = run(&["groebner", &sys]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["zero_dimensional"], false);
    assert_eq!(v["basis"], serde_json::json!(["x1*x2"]));
}

fn verify_all(seed_args: &[&str], env_seed: Option<&str>) -> Output {
    let mut c = bin();
    c.args(["verify", "all"]).args(seed_args);
    if let Some(s) = env_seed {
        c.env("KOSZULKIT_SEED", s);
    }
    c.output().unwrap()
}

#[test]
fn reports_are_deterministic_and_seed_env_overrides_flag() {
    let a = verify_all(&["--seed", "42"], None);
    let b = verify_all(&["--seed", "42"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let env = verify_all(&["--seed", "5"], Some("42"));
    assert_eq!(env.stdout, a.stdout);
    let other = verify_all(&["--seed", "43"], None);
    assert_ne!(other.stdout, a.stdout);
    assert_eq!(json(&a)["params"]["seed"], 42);
}

#[test]
fn timings_are_opt_in() {
    let plain = json(&run(&["verify", "thm4"]));
    let has_timing = |v: &Value| v["reports"].as_array().unwrap().iter().any(|r| r.get("elapsed_ms").is_some());
    assert!(!has_timing(&plain));
    assert!(has_timing(&json(&run(&["verify", "thm4", "--timings"]))));
}

#[test]
fn in_process_entry_point_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = koszulkit::cli::run(["koszulkit", "verify", "lemma3", "--n", "1", "--s", "1"], &mut out, &mut err);
    assert_eq!(code, 0);
    let bin_out = run(&["verify", "lemma3", "--n", "1", "--s", "1"]);
    assert_eq!(out, bin_out.stdout);
    assert!(Path::new(env!("CARGO_BIN_EXE_koszulkit")).exists());
}
