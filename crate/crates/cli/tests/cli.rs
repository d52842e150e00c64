use std::process::{Command, Output};

use serde_json::Value;

fn grover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grover")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_cycle_reports_period() {
    let out = grover(&["analyze", "--family", "cycle:5", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["period"]["verdict"]["period"], 5);
    assert_eq!(v["period"]["verdict"]["kind"], "periodic");
    assert_eq!(v["graph"]["n"], 5);
    assert_eq!(v["spectral_map"]["matched"], true);
    assert!(v.get("timing").is_none());
    assert_eq!(v["charpoly"]["coefficients"][5], "1/1");
}

#[test]
fn analyze_two_tail() {
    let v = json_of(&grover(&["analyze", "--family", "twotail:3,2", "--no-timing"]));
    assert_eq!(v["degree_condition"]["kind"], "one_degree_four");
    assert_eq!(v["degree_condition"]["vertex"], 0);
    let period = v["period"]["verdict"]["period"].as_u64().unwrap();
    assert_eq!(period % 2, 0);
}

#[test]
fn analyze_file_and_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("paw.txt");
    std::fs::write(&good, "# paw\n4 4\n0 1\n1 2\n2 0\n0 3\n").unwrap();
    let out_file = dir.path().join("report.json");
    let out = grover(&["analyze", good.to_str().unwrap(), "--out", out_file.to_str().unwrap(), "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    assert_eq!(v["period"]["verdict"]["kind"], "refuted_by_integrality");
    assert_eq!(v["integrality"]["passes"], false);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2 2\n0 1\n1 1\n").unwrap();
    let out = grover(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    let a = grover(&["analyze", "--family", "kbipartite:2,3", "--no-timing"]);
    let b = grover(&["analyze", "--family", "kbipartite:2,3", "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
    let a = grover(&["census", "--max-n", "6", "--no-timing"]);
    let b = grover(&["census", "--max-n", "6", "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn census_summaries() {
    let v = json_of(&grover(&["census", "--max-n", "4", "--no-timing"]));
    assert_eq!(v["records"].as_array().unwrap().len(), 2);

    let v = json_of(&grover(&["census", "--max-n", "5", "--no-timing"]));
    let odd: Vec<u64> = v["summary"]["odd_periodic"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["period"].as_u64().unwrap())
        .collect();
    assert_eq!(odd, vec![3, 5]);

    assert_eq!(grover(&["census", "--max-n", "13"]).status.code(), Some(2));
}

#[test]
fn gen_writes_graph_files() {
    let out = grover(&["gen", "--family", "cycle:7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("7 7\n"));
    assert_eq!(text.lines().count(), 8);

    let out = grover(&["gen", "--family", "twotail:5,3"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("11 11\n"));

    assert_eq!(grover(&["gen", "--family", "twotail:4,2"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "--suite", "table1"],
        vec!["verify", "--suite", "chebyshev", "--k", "3,5,7", "--r", "2..6"],
        vec!["verify", "--suite", "identities", "--max-n", "6", "--k", "3", "--r", "1..4"],
        vec!["verify", "--suite", "main-theorem", "--max-n", "7"],
        vec!["verify", "--suite", "spectral-map", "--max-n", "4"],
    ] {
        let out = grover(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
        assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
    }
}

#[test]
fn verify_reports_failures_with_exit_one() {
    // with no spectral hint and a tiny exhaustive range most periods are missed
    let out = grover(&["verify", "--suite", "table1", "--q-max", "1", "--k-max", "3", "--json", "--no-timing"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["passed"], false);
    assert!(v["failed"].as_u64().unwrap() > 0);
    let text = grover(&["verify", "--suite", "table1", "--q-max", "1", "--k-max", "3"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("FAIL cycle:5"));
    assert_eq!(grover(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn bounded_search_and_budget() {
    let out = grover(&["analyze", "--family", "cycle:5", "--q-max", "1", "--k-max", "3", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["period"]["verdict"]["kind"], "no_period_up_to");

    let out = grover(&["analyze", "--family", "cycle:5", "--bit-budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}
