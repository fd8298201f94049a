//! End-to-end tests of the `levelsplit` binary: exit-code contract,
//! byte-for-byte determinism, and agreement with direct library calls.

use assert_cmd::Command;
use levelsplit::linkmodel::{braid_closure, parse_braid};
use levelsplit::skein::{cs_expectation, Normalization};
use predicates::prelude::*;
use std::fs;

fn bin() -> Command {
    Command::cargo_bin("levelsplit").unwrap()
}

fn write_tmp(dir: &tempfile::TempDir, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

const TREFOIL: &str = r#"{"format":"braid","word":[1,1,1]}"#;

const SIMPLE_WORD: &str = r#"{
    "entries": [
        {"kind": "T", "curve": "a", "charge": 1},
        {"kind": "W", "curve": "b", "charge": 1}
    ],
    "intersections": [[0, 1], [-1, 0]]
}"#;

#[test]
fn invariant_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(&dir, "trefoil.json", TREFOIL);
    let out = bin()
        .args(["invariant", "--level", "3", "--input"])
        .arg(&input)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let got: serde_json::Value = serde_json::from_slice(&out).unwrap();

    let pd = braid_closure(&parse_braid("1 1 1").unwrap());
    let expected = cs_expectation(&pd, 3, Normalization::Bracket)
        .unwrap()
        .to_json();
    assert_eq!(got, expected);
}

#[test]
fn invariant_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(&dir, "trefoil.json", TREFOIL);
    let run = || {
        bin()
            .args(["invariant", "--level", "5", "--input"])
            .arg(&input)
            .assert()
            .success()
            .get_output()
            .stdout
            .clone()
    };
    assert_eq!(run(), run());
}

#[test]
fn output_flag_writes_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(&dir, "trefoil.json", TREFOIL);
    let outfile = dir.path().join("result.json");
    let stdout = bin()
        .args(["invariant", "--level", "2", "--input"])
        .arg(&input)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    bin()
        .args(["invariant", "--level", "2", "--input"])
        .arg(&input)
        .arg("--output")
        .arg(&outfile)
        .assert()
        .success()
        .stdout(predicate::str::is_empty());
    assert_eq!(fs::read(&outfile).unwrap(), stdout);
}

#[test]
fn missing_input_file_is_a_parse_error() {
    bin()
        .args(["invariant", "--level", "3", "--input", "/nonexistent.json"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("cannot read"));
}

#[test]
fn malformed_link_json_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(&dir, "bad.json", "{ not json");
    bin()
        .args(["invariant", "--level", "3", "--input"])
        .arg(&input)
        .assert()
        .code(2);
}

#[test]
fn invalid_level_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(&dir, "trefoil.json", TREFOIL);
    bin()
        .args(["invariant", "--level", "0", "--input"])
        .arg(&input)
        .assert()
        .code(3)
        .stderr(predicate::str::contains("level"));
}

#[test]
fn algebra_reports_canonical_word_and_phase() {
    let dir = tempfile::tempdir().unwrap();
    let word = write_tmp(&dir, "word.json", SIMPLE_WORD);
    let out = bin()
        .args(["algebra", "--level", "2", "--word"])
        .arg(&word)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    // T moved past W with l = 1 at k = 2: phase e^{iπ} = −1
    assert_eq!(v["entries"][0]["kind"], "W");
    assert_eq!(v["entries"][1]["kind"], "T");
    assert_eq!(v["phase"]["numerator"], 1);
    assert_eq!(v["phase"]["denominator"], 2);
    assert!((v["phase_re"].as_f64().unwrap() + 1.0).abs() < 1e-12);
}

#[test]
fn algebra_rejects_non_antisymmetric_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let word = write_tmp(
        &dir,
        "word.json",
        r#"{"entries":[{"kind":"T","curve":"a","charge":1},
                       {"kind":"W","curve":"b","charge":1}],
            "intersections":[[0,1],[1,0]]}"#,
    );
    bin()
        .args(["algebra", "--level", "2", "--word"])
        .arg(&word)
        .assert()
        .code(3);
}

#[test]
fn tmym_rejects_odd_level() {
    let dir = tempfile::tempdir().unwrap();
    let word = write_tmp(
        &dir,
        "word.json",
        r#"{"entries":[{"kind":"W","curve":"a","charge":1}],
            "intersections":[[0]]}"#,
    );
    bin()
        .args(["tmym", "--level", "3", "--m", "10", "--word"])
        .arg(&word)
        .assert()
        .code(3)
        .stderr(predicate::str::contains("even"));
}

#[test]
fn tmym_with_curve_matches_direct_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let word = write_tmp(
        &dir,
        "word.json",
        r#"{"entries":[{"kind":"W","curve":"a","charge":1}],
            "intersections":[[0]],
            "curves":{"a":{"format":"braid","word":[1,1,1]}}}"#,
    );
    let out = bin()
        .args(["tmym", "--level", "6", "--m", "10", "--word"])
        .arg(&word)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();

    let pd = braid_closure(&parse_braid("1 1 1").unwrap());
    let direct = cs_expectation(&pd, 3, Normalization::Bracket)
        .unwrap()
        .to_json();
    assert_eq!(v["value_exact"], direct["value_exact"]);
    assert_eq!(v["provenance"][0]["cs_level"], 3);
    assert_eq!(v["correction"]["order"], 2);
}

#[test]
fn split_reports_half_levels() {
    let out = bin()
        .args(["split", "--theory", "YM", "--level", "5", "--m", "1.0"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["factors"][0]["level"]["numerator"], 5);
    assert_eq!(v["factors"][0]["level"]["denominator"], 2);
    assert_eq!(v["factors"][1]["level"]["numerator"], -5);
    assert_eq!(v["observable_map_available"], false);
}

#[test]
fn split_rejects_cs() {
    bin()
        .args(["split", "--theory", "CS", "--level", "4"])
        .assert()
        .code(3);
    bin()
        .args(["split", "--theory", "BOGUS", "--level", "4"])
        .assert()
        .code(2);
}

#[test]
fn verify_unknown_suite_is_a_parse_error() {
    bin()
        .args(["verify", "--suite", "bogus", "--seed", "1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("unknown suite"));
}

#[test]
fn verify_symplectic_converges_on_small_grid() {
    let out = bin()
        .args([
            "verify",
            "--suite",
            "symplectic",
            "--grid",
            "8",
            "--seed",
            "1",
        ])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["converged"], true);
    assert_eq!(v["suite"], "symplectic");
}

#[test]
fn verify_failure_exits_four() {
    // an impossible tolerance cannot converge
    bin()
        .args([
            "verify",
            "--suite",
            "symplectic",
            "--grid",
            "8",
            "--seed",
            "1",
            "--tol",
            "1e-30",
        ])
        .assert()
        .code(4);
}

#[test]
fn verify_is_seed_deterministic() {
    let run = |seed: &str| {
        bin()
            .args([
                "verify",
                "--suite",
                "symplectic",
                "--grid",
                "8",
                "--seed",
                seed,
            ])
            .assert()
            .get_output()
            .stdout
            .clone()
    };
    assert_eq!(run("7"), run("7"));
    assert_ne!(run("7"), run("8"));
}
