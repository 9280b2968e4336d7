//! End-to-end tests of the `cphi` binary: output shapes, determinism,
//! and the documented exit-code contract.

use std::process::{Command, Output};

fn cphi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cphi"))
        .args(args)
        .env_remove("CPHI_ENUM_CAP")
        .output()
        .expect("failed to spawn cphi")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn coeffs(out: &Output) -> Vec<String> {
    let v: serde_json::Value = serde_json::from_str(&stdout(out)).unwrap();
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn cphi_catalog_k2() {
    let out = cphi(&["cphi", "--k", "2", "--terms", "4", "--method", "catalog"]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(coeffs(&out), ["1", "4", "9", "20"]);
}

#[test]
fn cphi_enumerate_k1_is_partitions() {
    let out = cphi(&["cphi", "--k", "1", "--terms", "6", "--method", "enumerate"]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(coeffs(&out), ["1", "1", "2", "3", "5", "7"]);
}

#[test]
fn cphi_recursion_constant_term() {
    let out = cphi(&["cphi", "--k", "3", "--terms", "1", "--method", "recursion"]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(coeffs(&out), ["1"]);
}

#[test]
fn routes_agree_via_cli() {
    let a = cphi(&["cphi", "--k", "4", "--terms", "12", "--method", "recursion"]);
    let b = cphi(&["cphi", "--k", "4", "--terms", "12", "--method", "product"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(coeffs(&a), coeffs(&b));
}

#[test]
fn text_output_table() {
    let out = cphi(&[
        "cphi", "--k", "2", "--terms", "3", "--method", "product", "--output", "text",
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("cphi_2(n)"), "{text}");
    assert!(text.lines().count() >= 4, "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["cphi", "--k", "0", "--terms", "4"] as &[&str],
        &["cphi", "--k", "5", "--terms", "4", "--method", "catalog"],
        &["formula", "--k", "1"],
        &["cphi", "--terms", "4"],
        &["verify", "--suite", "nonsense"],
    ] {
        let out = cphi(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {out:?}");
    }
}

#[test]
fn cap_exceeded_exits_3() {
    let out = cphi(&["enumerate", "--k", "3", "--terms", "14", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");

    let out = Command::new(env!("CARGO_BIN_EXE_cphi"))
        .args(["enumerate", "--k", "3", "--terms", "14"])
        .env("CPHI_ENUM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn formula_is_deterministic_and_parses() {
    let a = cphi(&["formula", "--k", "6"]);
    let b = cphi(&["formula", "--k", "6"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["k"], 6);
    assert!(v["formula"].as_str().unwrap().contains("(q;q)"));

    let text = cphi(&["formula", "--k", "6", "--output", "text"]);
    assert_eq!(
        stdout(&text).trim_end(),
        v["formula"].as_str().unwrap(),
        "text output should be the bare formula"
    );
}

#[test]
fn htable_lists_all_residues() {
    let out = cphi(&["htable", "--k", "4"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["level"], "2");
    assert_eq!(v["entries"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_suite_passes_and_reports() {
    let out = cphi(&["verify", "--suite", "bs", "--terms", "20"]);
    assert!(out.status.success(), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for r in reports {
        assert_eq!(r["status"], "pass", "{r}");
    }

    let out = cphi(&[
        "verify", "--suite", "routes", "--k", "3", "--terms", "10", "--output", "text",
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS")));
}
