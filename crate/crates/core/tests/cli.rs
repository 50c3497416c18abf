//! The `dsring` binary: exit codes, golden outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

const PAIR: &[&str] = &[
    "--a", "2", "--b", "2", "--c", "2", "--d", "1", "--lambda", "1,1", "--mu", "1",
];

fn dsring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dsring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_pair(head: &[&str], tail: &[&str]) -> Vec<String> {
    head.iter()
        .chain(PAIR)
        .chain(tail)
        .map(|s| s.to_string())
        .collect()
}

fn stdout(args: &[String]) -> String {
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = dsring(&args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn json_matches_golden_files() {
    for ring in ["h", "hs", "ks"] {
        let got = stdout(&with_pair(
            &["multiply", "--ring", ring],
            &["--out", "json"],
        ));
        assert_eq!(
            got,
            golden(&format!("multiply_{ring}.json")),
            "multiply --ring {ring}"
        );
    }
    assert_eq!(
        stdout(&with_pair(&["dreams", "--ring", "ks"], &["--out", "json"])),
        golden("dreams_ks.json")
    );
    assert_eq!(
        stdout(&with_pair(
            &["pattern", "--sigma-prime"],
            &["--out", "json"]
        )),
        golden("sigma_prime.json")
    );
    let lr: Vec<String> = ["lr", "--lambda", "2,1", "--mu", "2,1", "--out", "json"]
        .map(String::from)
        .to_vec();
    assert_eq!(stdout(&lr), golden("lr_21_21.json"));
    let tiles: Vec<String> = ["tiles", "--half", "lower", "--mode", "k"]
        .map(String::from)
        .to_vec();
    assert_eq!(stdout(&tiles), golden("tiles_lower_k.txt"));
}

#[test]
fn json_is_stable_and_parses() {
    let args = with_pair(&["multiply", "--ring", "ks"], &["--out", "json"]);
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["ring"], "KS");
    assert_eq!(v["terms"].as_array().unwrap().len(), 6);
}

#[test]
fn text_output() {
    let h = stdout(&with_pair(&["multiply"], &[]));
    assert_eq!(h.trim(), "[X^(1,1,1,0)] + [X^(2,1,0,0)]");
    let hs = stdout(&with_pair(&["multiply", "--ring", "hs"], &[]));
    assert!(hs.contains("t^2[X^(2,2,1,0)]"), "{hs}");
    let latex = stdout(&with_pair(
        &["multiply", "--ring", "ks"],
        &["--out", "latex"],
    ));
    assert!(latex.contains("\\exp(t)"), "{latex}");
    let dreams = stdout(&with_pair(&["dreams", "--ring", "ks"], &["--render"]));
    assert!(
        dreams.starts_with("7 dreams for (1,1) in 2x2 x (1,0) in 2x1 in KS"),
        "{dreams}"
    );
    assert_eq!(dreams.matches("\n#").count(), 7);
}

#[test]
fn selftest_passes() {
    let out = dsring(&["selftest"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("0 failed"), "{text}");
}

#[test]
fn exit_codes() {
    let usage: &[&[&str]] = &[
        &[],
        &["bogus"],
        &["multiply", "--ring", "z"],
        &["multiply", "--a", "1", "--b", "1", "--lambda", "3"],
        &["multiply", "--a", "-1"],
        &["lr", "--lambda", "1,2"],
        &["pattern", "--window", "1,1"],
    ];
    for args in usage {
        let out = dsring(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    assert_eq!(dsring(&["--help"]).status.code(), Some(0));
    assert_eq!(dsring(&["--version"]).status.code(), Some(0));
}
