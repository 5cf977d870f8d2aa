use std::process::Command;

use factorcheck::cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("factorcheck").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn record(line: &str) -> serde_json::Value {
    serde_json::from_str(line).unwrap()
}

#[test]
fn ppd_prints_a_set() {
    assert_eq!(call(&["ppd", "2", "12"]), (EXIT_OK, "{13}\n".into(), String::new()));
    assert_eq!(call(&["ppd", "2", "6"]).1, "{7}\n");
    assert_eq!(call(&["ppd", "1", "3"]).0, EXIT_USAGE);
}

#[test]
fn order_prints_decimal() {
    let (code, out, _) = call(&["order", "Sp", "4", "8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1056706560");
}

#[test]
fn suzuki_row_verifies() {
    let (code, out, _) = call(&["verify", "--table", "T1", "--row", "6", "--params", "f=3"]);
    assert_eq!(code, EXIT_OK);
    let r = record(out.trim());
    assert_eq!(r["schema"], 1);
    assert_eq!(r["verdict"], "verified");
    assert_eq!(r["intersection"], "14");
    assert_eq!(r["seed"], 24301);
}

#[test]
fn refutation_exits_with_one() {
    let (code, out, _) = call(&["verify", "--table", "T1", "--row", "5", "--params", "l=1,P=1,Q=1"]);
    assert_eq!(code, EXIT_FAILED);
    assert_eq!(record(out.trim())["verdict"], "refuted");
}

#[test]
fn usage_errors_exit_with_two() {
    let (code, out, err) = call(&["verify", "--table", "T1", "--row", "6", "--params", "f=4"]);
    assert_eq!((code, out.as_str()), (EXIT_USAGE, ""));
    assert!(err.contains("f % 2 == 1"), "{err}");
    assert_eq!(call(&["verify", "--table", "T9", "--row", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--table", "T1", "--row", "99"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--table", "T1", "--row", "6", "--params", "f=="]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
}

#[test]
fn screen_emits_sorted_records() {
    let (code, out, _) = call(&["screen", "--table", "T2", "--max-q", "4", "--max-l", "2"]);
    assert_eq!(code, EXIT_OK);
    let ids: Vec<String> = out.lines().map(|l| record(l)["id"].as_str().unwrap().to_owned()).collect();
    assert!(!ids.is_empty());
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn small_budget_falls_back_to_screening() {
    let out = Command::new(env!("CARGO_BIN_EXE_factorcheck"))
        .args(["verify", "--table", "T2", "--row", "1", "--params", "f=2,l=1"])
        .env("FACTORCHECK_MAX_POINTS", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let r = record(String::from_utf8_lossy(&out.stdout).trim());
    assert_eq!(r["verdict"], "screened-consistent");
    assert!(r["intersection"].is_null());

    let bad = Command::new(env!("CARGO_BIN_EXE_factorcheck"))
        .args(["ppd", "2", "5"])
        .env("FACTORCHECK_MAX_POINTS", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
