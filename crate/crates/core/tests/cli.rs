//! End-to-end checks of the `twistcheck` binary: exit codes, literal
//! parsing, and agreement between the text, JSON, and CSV renderings.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn count_matches_table1_row() {
    let out = run(&["count", "--group", "D:3", "--aut", "1,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("m = 1"), "{}", stdout(&out));
}

#[test]
fn count_equality_case() {
    let out = run(&["count", "--group", "D:6", "--aut", "5,0", "--brute-force", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["m_closed"], 8);
    assert_eq!(v["m_brute"], 8);
    assert_eq!(v["equality"], true);
}

#[test]
fn renderings_carry_identical_numbers() {
    let json = run(&["count", "--group", "D:12", "--aut", "5,0", "--format", "json"]);
    let csv = run(&["count", "--group", "D:12", "--aut", "5,0", "--format", "csv"]);
    let text = run(&["count", "--group", "D:12", "--aut", "5,0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let (m, rot, refl, t) = (&v["m_closed"], &v["rot"], &v["refl"], &v["T"]);
    let csv_line = stdout(&csv).lines().nth(1).unwrap().to_string();
    assert_eq!(csv_line, format!("D:12,5,0,{m},,{rot},{refl},{t},true,false"));
    let text = stdout(&text);
    assert!(text.contains(&format!("m = {m}")), "{text}");
    assert!(text.contains(&format!("T = {t}")), "{text}");
}

#[test]
fn congruence_unsolvable() {
    let out = run(&["congruence", "--a", "2", "--c", "1", "--n", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solvable"], false);
    assert_eq!(v["count"], 0);
}

#[test]
fn table1_prints_six_rows() {
    let out = run(&["table1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{e, s, rs, r^2s}, 4"), "{text}");
    assert!(text.contains("{e}, 1"), "{text}");
}

#[test]
fn aut_list_counts_and_convention_note() {
    let out = run(&["aut-list", "--group", "D:6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("12 automorphisms"), "{text}");
    assert!(text.contains("r -> r^u"), "{text}");
    assert!(text.contains("{\"u\": 5, \"v\": 0}"), "{text}");
}

#[test]
fn verify_dihedral_exits_zero() {
    let out = run(&["verify", "dihedral", "--max-l", "10", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["violations"], 0);
}

#[test]
fn verify_orders_exits_zero() {
    let out = run(&["verify", "orders", "--primes", "2,3,5"]);
    assert!(out.status.success());
}

#[test]
fn indicators_single_aut() {
    let out = run(&["indicators", "--group", "D:5", "--aut", "4,0", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4); // four D_5 irreps
    assert_eq!(v[0]["epsilon"], 1);
    assert_eq!(v[0]["twisted"][0]["integral"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "--group", "Q:8", "--aut", "1,0"][..],
        &["count", "--group", "D:6", "--aut", "2,0"][..], // gcd(2,6) != 1
        &["count", "--group", "D:6", "--aut", "nonsense"][..],
        &["aut-list", "--group", "Z:6"][..],
        &["verify", "orders", "--primes", "9"][..],
        &["congruence", "--a", "1", "--c", "1", "--n", "0"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty(), "args {args:?}");
    }
}
