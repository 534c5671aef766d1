use std::path::PathBuf;
use std::process::{Command, Output};

use msdual_cli::doc::{self, DocError, ParseError};
use proptest::prelude::*;
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msdual")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_temp(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("msdual-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate", &fixture("L.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["payload"]["size"], 7);

    let bad = run(&["validate", &fixture("malformed.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["status"], "parse-error");

    let na = run(&["validate", &fixture("nonassoc.json")]);
    assert_eq!(na.status.code(), Some(2));
    let v = json(&na);
    assert_eq!(v["checks"][0]["pass"], false);
    assert_eq!(v["checks"][0]["witness"], "not associative at (x, y, z)");

    assert_eq!(run(&["validate", "/nonexistent/x.json"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn structural_errors() {
    let both = write_temp(
        "both.json",
        r#"{"elements":["0","1"],"order":[["0","1"]],"meet":[["0","0"],["0","1"]],"top":"1"}"#,
    );
    assert_eq!(run(&["validate", &both]).status.code(), Some(1));
    let unknown = write_temp("unknown.json", r#"{"elements":["0","1"],"order":[["0","q"]],"top":"1"}"#);
    assert_eq!(run(&["validate", &unknown]).status.code(), Some(1));
    let nomeet = write_temp("nomeet.json", r#"{"elements":["x","y","1"],"order":[["x","1"],["y","1"]],"top":"1"}"#);
    let out = run(&["dual", &nomeet]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["checks"][0]["witness"], "x and y have no greatest lower bound");
    let notmono = write_temp(
        "notmono.json",
        r#"{"elements":["0","1"],"order":[["0","1"]],"top":"1","monotone":{"0":"1","1":"0"}}"#,
    );
    assert_eq!(run(&["validate", &notmono]).status.code(), Some(2));
    let nothom = write_temp(
        "nothom.json",
        r#"{"elements":["0","1"],"order":[["0","1"]],"top":"1","maps":{"h":{"0":"0","1":"0"}}}"#,
    );
    assert_eq!(run(&["validate", &nothom]).status.code(), Some(2));
}

#[test]
fn dual_of_l() {
    let out = run(&["dual", &fixture("L.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let filters: Vec<Vec<String>> = v["payload"]["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| serde_json::from_value(p["filter"].clone()).unwrap())
        .collect();
    assert_eq!(
        filters,
        vec![vec!["d", "1"], vec!["a", "e", "1"], vec!["b", "e", "1"], vec!["c", "d", "e", "1"]]
    );
    assert_eq!(v["payload"]["subbase"].as_array().unwrap().len(), 7);
    assert_eq!(v["payload"]["beta"].as_array().unwrap().len(), 7);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn every_command_passes_on_fixtures() {
    for f in ["L.json", "L_monotone.json", "chain3.json"] {
        for c in ["validate", "dual", "canext", "congruences", "vietoris", "verify-all"] {
            let out = run(&[c, &fixture(f)]);
            assert_eq!(out.status.code(), Some(0), "{c} {f}: {}", String::from_utf8_lossy(&out.stdout));
            assert_eq!(json(&out)["command"], c);
        }
    }
    assert_eq!(run(&["extend", &fixture("L_monotone.json")]).status.code(), Some(0));
    assert_eq!(run(&["extend", &fixture("L.json")]).status.code(), Some(2));
    assert_eq!(run(&["extend", &fixture("L_monotone.json"), "--map", "m"]).status.code(), Some(0));
    assert_eq!(run(&["extend", &fixture("L_monotone.json"), "--map", "zz"]).status.code(), Some(2));
}

#[test]
fn congruence_counts_for_l() {
    let v = json(&run(&["congruences", &fixture("L.json")]));
    assert_eq!(v["payload"]["count"], 38);
    let v = json(&run(&["vietoris", &fixture("L.json")]));
    assert_eq!(v["payload"]["plain"]["families"].as_array().unwrap().len(), 38);
}

#[test]
fn enumerate_and_verify() {
    let out = run(&["enumerate", "3", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["payload"]["count"], 1);
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    let v = json(&run(&["enumerate", "6"]));
    assert_eq!(v["payload"]["count"], 15);
}

#[test]
fn quiet_and_dot() {
    let dot = std::env::temp_dir().join(format!("msdual-cli-{}.dot", std::process::id()));
    let out = run(&["dual", &fixture("L.json"), "--quiet", "--dot", &dot.display().to_string()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("digraph").count(), 2);
    assert!(text.contains("n0 -> n3"));
}

#[test]
fn golden_reports() {
    let cases: [(&str, &[&str]); 5] = [
        ("validate_L.json", &["validate", "L.json"]),
        ("dual_L.json", &["dual", "L.json"]),
        ("canext_L.json", &["canext", "L.json"]),
        ("validate_nonassoc.json", &["validate", "nonassoc.json"]),
        ("extend_chain3.json", &["extend", "chain3.json"]),
    ];
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden");
    for (name, args) in cases {
        let out = run(&[args[0], &fixture(args[1])]);
        let path = golden.join(name);
        if std::env::var_os("MSDUAL_BLESS").is_some() {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let want = std::fs::read(&path).unwrap();
        assert!(out.stdout == want, "{name} differs from golden");
    }
}

#[test]
fn same_seed_same_bytes() {
    for f in ["L.json", "L_monotone.json"] {
        let a = run(&["verify-all", &fixture(f), "--seed", "7", "--all"]);
        let b = run(&["verify-all", &fixture(f), "--seed", "7", "--all"]);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn parse_errors_are_typed() {
    assert!(matches!(doc::parse_str("{"), Err(ParseError::Json(_))));
    let d = doc::parse_str(r#"{"elements":["0","0"],"order":[],"top":"0"}"#).unwrap();
    assert!(matches!(d.load(), Err(DocError::Parse(ParseError::DuplicateLabel(_)))));
    let d = doc::parse_str(r#"{"elements":["0"],"top":"0"}"#).unwrap();
    assert!(matches!(d.load(), Err(DocError::Parse(ParseError::OrderOrMeet))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn canonical_round_trip(n in 1usize..7, pick in any::<u64>(), op_pick in any::<u64>()) {
        let all = msdual::enumerate::semilattices_of_size(n);
        let s = all[(pick % all.len() as u64) as usize].clone();
        let ops = msdual::enumerate::all_monotone_ops(&s);
        let op = ops[(op_pick % ops.len() as u64) as usize].clone();
        let ms = msdual::MonotoneSemilattice::new(s.clone(), op).unwrap();
        let d = doc::canonical(&s, Some(&ms), &[]);
        let text = serde_json::to_string(&d).unwrap();
        let back = doc::parse_str(&text).unwrap();
        prop_assert_eq!(&back, &d);
        let loaded = back.load().unwrap();
        prop_assert_eq!(&loaded.semilattice.meet_table(), &s.meet_table());
        prop_assert_eq!(loaded.monotone.as_ref().unwrap().op_table(), ms.op_table());
        prop_assert_eq!(loaded.canonical(), d);
    }
}
