use clique_splitter_cli::{exit, run_from};
use serde_json::Value;
use std::path::Path;
use std::process::Command;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("clique-splitter").chain(args.iter().copied());
    let code = run_from(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_is_deterministic_and_summarized() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.dimacs");
    let b = dir.path().join("b.dimacs");
    for p in [&a, &b] {
        let r = run(&["gen", "regular:28,13", "--seed", "3", "--out", path_str(p)]);
        assert_eq!(r.code, exit::OK, "{}", r.err);
        assert!(r.out.starts_with("n=28 m=182 Δ=13"), "{}", r.out);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let r = run(&["gen", "strong:5x2", "--json"]);
    assert_eq!(r.code, exit::OK);
    let s: Value = serde_json::from_str(r.err.trim()).unwrap();
    assert_eq!((s["n"].as_u64(), s["omega"].as_u64()), (Some(10), Some(4)));
    assert!(r.out.starts_with("p edge 10 25"), "{}", r.out);

    let r = run(&["gen", "complete:5", "--json"]);
    let s: Value = serde_json::from_str(r.err.trim()).unwrap();
    assert_eq!((s["omega"].as_u64(), s["max_degree"].as_u64()), (Some(5), Some(4)));
}

#[test]
fn partition_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let r = run(&[
        "partition", "--gen", "regular:28,13", "--seed", "3", "--quotas", "7,7", "--json", "--no-timing", "--out",
        path_str(&report),
    ]);
    assert_eq!(r.code, exit::OK, "{}", r.err);
    let doc: Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(doc["valid"], Value::Bool(true));
    assert_eq!(doc["elapsed_ms"].as_u64(), Some(0));
    assert_eq!(doc["assignment"].as_array().unwrap().len(), 28);
    assert!(doc["part_omegas"].as_array().unwrap().iter().all(|w| w.as_u64().unwrap() < 7));

    let r = run(&["verify", "--gen", "regular:28,13", "--seed", "3", "--partition", path_str(&report)]);
    assert_eq!(r.code, exit::OK, "{}", r.err);
    assert!(r.out.trim_end().ends_with("valid"));
}

#[test]
fn k_way_and_maximize_first() {
    let r = run(&["partition", "--gen", "regular:28,13", "--seed", "3", "--quotas", "5,5,5", "--json"]);
    assert_eq!(r.code, exit::OK, "{}", r.err);
    let doc: Value = serde_json::from_str(r.out.trim()).unwrap();
    assert!(doc["strategy"].as_str().unwrap().starts_with("kway["));

    let small = run(&["partition", "--gen", "regular:12,5", "--quotas", "3,3", "--maximize-first", "--json"]);
    assert_eq!(small.code, exit::OK, "{}", small.err);
    let doc: Value = serde_json::from_str(small.out.trim()).unwrap();
    assert_eq!(doc["certificate"], "exhaustive");
    let local = run(&[
        "partition", "--gen", "regular:12,5", "--quotas", "3,3", "--maximize-first", "--json", "--budget-n", "0",
    ]);
    assert_eq!(local.code, exit::OK, "{}", local.err);
    let doc_local: Value = serde_json::from_str(local.out.trim()).unwrap();
    assert_eq!(doc_local["certificate"], "local");
    let first = |d: &Value| d["assignment"].as_array().unwrap().iter().filter(|a| a.as_u64() == Some(0)).count();
    assert!(first(&doc_local) <= first(&doc));
}

#[test]
fn precondition_failures_exit_2() {
    let r = run(&["partition", "--gen", "complete:6", "--quotas", "4,3", "--json"]);
    assert_eq!(r.code, exit::PRECONDITION);
    let doc: Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(doc["error"], "precondition");

    let r = run(&["partition", "--gen", "pendant:13@0/cycle:4", "--quotas", "7,7", "--json"]);
    assert_eq!(r.code, exit::PRECONDITION);
    let doc: Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(doc["witness"].as_array().unwrap().len(), 13);

    let r = run(&["partition", "--gen", "regular:28,13", "--quotas", "5,9"]);
    assert_eq!(r.code, exit::PRECONDITION, "{}", r.err);
    let r = run(&["partition", "--gen", "regular:28,13", "--quotas", "12,1"]);
    assert_eq!(r.code, exit::PRECONDITION, "{}", r.err);
}

#[test]
fn input_failures_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["partition", "--in", "/nonexistent/graph.dimacs", "--quotas", "2,2"]);
    assert_eq!(r.code, exit::IO);
    assert!(r.err.contains("/nonexistent/graph.dimacs"));

    let truncated = dir.path().join("g.json");
    std::fs::write(&truncated, "{\"n\": 4, \"adjacency\": [[1],").unwrap();
    let r = run(&["stats", "--in", path_str(&truncated)]);
    assert_eq!(r.code, exit::IO, "{}", r.err);

    let r = run(&["partition", "--gen", "cycle:5", "--quotas", "2,x"]);
    assert_eq!(r.code, exit::IO);
    let r = run(&["partition", "--gen", "nonsense:5", "--quotas", "2,2"]);
    assert_eq!(r.code, exit::IO);
    let r = run(&["frobnicate"]);
    assert_eq!(r.code, exit::IO);
}

#[test]
fn verify_reports_a_forbidden_clique() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("bad.json");
    // K5 and C5 side by side, everything in the quota-4 part
    std::fs::write(&doc, r#"{"assignment": [0,0,0,0,0,1,1,1,1,1], "quotas": [4, 3]}"#).unwrap();
    let r = run(&["verify", "--gen", "union:complete:5+cycle:5", "--partition", path_str(&doc), "--json"]);
    assert_eq!(r.code, exit::INVALID, "{}", r.err);
    let rep: Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(rep["valid"], Value::Bool(false));
    let witness = rep["violations"][0]["witness"].as_array().unwrap();
    assert_eq!(witness.len(), 4);
    assert!(witness.iter().all(|v| v.as_u64().unwrap() < 5));

    // wrong length is an input error, not a verdict
    std::fs::write(&doc, r#"{"assignment": [0,1], "quotas": [4, 3]}"#).unwrap();
    let r = run(&["verify", "--gen", "union:complete:5+cycle:5", "--partition", path_str(&doc)]);
    assert_eq!(r.code, exit::IO);
}

#[test]
fn stats_reports_the_product_structure() {
    let r = run(&["stats", "--gen", "strong:7x3", "--json"]);
    assert_eq!(r.code, exit::OK);
    let s: Value = serde_json::from_str(r.out.trim()).unwrap();
    assert_eq!(s["omega"].as_u64(), Some(6));
    assert_eq!(s["max_degree"].as_u64(), Some(8));
    assert_eq!(s["cycle_clique_product"], serde_json::json!([7, 3]));
}

#[test]
fn probe_is_deterministic() {
    let args = ["probe", "--recipe", "gnp:9,0.45", "--recipe", "regular:10,4", "--samples", "25"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, exit::OK, "{}", a.err);
    assert_eq!(a.out, b.out);
    let summary: Value = serde_json::from_str(a.err.trim().lines().last().unwrap()).unwrap();
    assert_eq!(summary["samples"].as_u64(), Some(50));
    assert_eq!(summary["contradictions"].as_u64(), Some(0));
    for line in a.out.lines() {
        let f: Value = serde_json::from_str(line).unwrap();
        assert!(f["omega"].as_u64() < f["max_degree"].as_u64());
    }

    let r = run(&["probe", "--recipe", "regular:10,4", "--samples", "10", "--quotas", "none"]);
    assert_eq!(r.code, exit::OK);
    assert!(r.out.is_empty());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_clique-splitter");
    let status = Command::new(bin)
        .args(["partition", "--gen", "complete:6", "--quotas", "4,3"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(exit::PRECONDITION));
    assert!(String::from_utf8_lossy(&status.stderr).contains("error:"));
    let status = Command::new(bin).args(["gen", "cycle:5"]).output().unwrap();
    assert_eq!(status.status.code(), Some(exit::OK));
    assert!(String::from_utf8_lossy(&status.stdout).starts_with("p edge 5 5"));
}
