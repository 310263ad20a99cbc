use std::process::{Command, Output};

use serde_json::Value;

fn dunkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl"))
        .args(args)
        .output()
        .expect("run dunkl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poly_prints_first_basic_polynomial() {
    let o = dunkl(&["poly", "p", "1", "0", "--N", "3", "--kappa", "generic"]);
    assert_eq!(o.status.code(), Some(0));
    let json = dunkl(&["poly", "p", "1", "0", "--out", "json"]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["nvars"], 3);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn poly_omega_at_half_integer() {
    let o = dunkl(&[
        "poly", "omega", "2", "1", "--N", "3", "--kappa", "-1/2", "--out", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert!(!terms.is_empty());
    for t in terms {
        let deg: u64 = t["exp"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e.as_u64().unwrap())
            .sum();
        assert_eq!(deg, 3);
    }
}

#[test]
fn pole_is_a_domain_error() {
    let o = dunkl(&["poly", "omega", "1", "1", "--N", "3", "--kappa", "-1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(dunkl(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(dunkl(&["poly", "omega", "2"]).status.code(), Some(2));
    assert_eq!(
        dunkl(&["poly", "p", "1", "0", "--kappa", "1/0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        dunkl(&["check", "/nonexistent/cert.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_suites_pass() {
    let o = dunkl(&[
        "verify",
        "commute",
        "--N",
        "4",
        "--max-degree",
        "5",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = dunkl(&["verify", "q2z", "--N", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("q-vanishes"));
}

#[test]
fn verify_json_report() {
    let o = dunkl(&["verify", "krawtchouk", "--out", "json", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 3);
}

#[test]
fn family_certificates() {
    let o = dunkl(&["family", "half", "0", "2", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["N"], 5);
    assert_eq!(v["kappa"], "-1/2");
    assert_eq!(v["label"], serde_json::json!([3, 2]));
    assert_eq!(
        v["checks"]["dunkl_zero"],
        serde_json::json!([true, true, true, true, true])
    );
    assert_eq!(v["checks"]["antisymmetric_12"], true);
    assert_eq!(v["checks"]["rank"], 6);

    assert_eq!(dunkl(&["family", "n0", "3", "3"]).status.code(), Some(3));
    assert_eq!(dunkl(&["family", "nn", "2", "5"]).status.code(), Some(3));
}

#[test]
fn certificates_recheck_and_detect_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let o = dunkl(&["family", "n0", "2", "3", "--out", "json"]);
    std::fs::write(&path, &o.stdout).unwrap();
    assert_eq!(
        dunkl(&["check", path.to_str().unwrap()]).status.code(),
        Some(0)
    );

    // a different polynomial with the original hash fails the recheck
    let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let other = dunkl(&["poly", "alt", "1", "--N", "3", "--out", "json"]);
    v["polynomial"] = serde_json::from_slice(&other.stdout).unwrap();
    std::fs::write(&path, serde_json::to_vec(&v).unwrap()).unwrap();
    assert_eq!(
        dunkl(&["check", path.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn table_rows_match() {
    let o = dunkl(&[
        "table", "val1n", "--N", "2", "--kappa", "1/4", "--m-max", "4", "--n-max", "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.ends_with("match")));
    assert!(rows[0].starts_with("0 0 | closed 1 | direct 1"));
}

#[test]
fn output_is_deterministic() {
    let a = dunkl(&["verify", "commute", "--seed", "11", "--jobs", "1"]);
    let b = dunkl(&["verify", "commute", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
}
