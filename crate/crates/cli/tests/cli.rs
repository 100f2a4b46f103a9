use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coadjoint-width")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn width_examples() {
    let r = json(&["width", "--type", "F4", "--lambda", "0,0,0,1"]);
    assert_eq!(r["schema_version"], "1");
    assert_eq!(r["command"], "width");
    assert_eq!(r["payload"]["bound"], "1");
    assert_eq!(r["payload"]["certificates"][0]["gw"], 1);

    let r = json(&["width", "--type", "A", "--rank", "2", "--basis", "un-diag", "--lambda", "3,1,0"]);
    assert_eq!(r["payload"]["bound"], "1");

    let r = json(&["width", "--type", "B", "--rank", "3", "--lambda", "-1/2,0,3/4"]);
    // Coroot of e1 + e3 is a1^v + a2^v + a3^v, pairing to -1/2 + 3/4.
    assert_eq!(r["payload"]["bound"], "1/4");
    let dom = r["payload"]["dominant_lambda"].as_array().unwrap();
    assert!(dom.iter().all(|c| !c.as_str().unwrap().starts_with('-')));
}

#[test]
fn width_euclidean_basis() {
    // lambda = e1 in C3 is omega_1.
    let r = json(&["width", "--type", "C3", "--basis", "euclidean", "--lambda", "1,0,0"]);
    assert_eq!(r["payload"]["dominant_lambda"], serde_json::json!(["1", "0", "0"]));
    assert_eq!(r["payload"]["bound"], "1");
    assert_eq!(code(&["width", "--type", "E6", "--basis", "euclidean", "--lambda", "1,0,0,0,0,0"]), 1);
}

#[test]
fn degenerate_orbit_exits_2() {
    let out = run(&["width", "--type", "A", "--rank", "1", "--lambda", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let body: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(body["error"]["kind"], "degenerate-orbit");
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(code(&["width", "--type", "A", "--rank", "2", "--lambda", "1,x"]), 1);
    assert_eq!(code(&["width", "--type", "A", "--rank", "2", "--lambda", "1/0,1"]), 1);
    assert_eq!(code(&["width", "--type", "A", "--rank", "2", "--lambda", "1,2,3"]), 1);
    assert_eq!(code(&["width", "--type", "A", "--lambda", "1"]), 1);
    assert_eq!(code(&["width", "--type", "F4", "--rank", "5", "--lambda", "1,0,0,0"]), 1);
    assert_eq!(code(&["width", "--type", "Q", "--rank", "2", "--lambda", "1,0"]), 1);
    assert_eq!(code(&["certify", "--type", "F4", "--node", "5"]), 1);
    assert_eq!(code(&["certify", "--type", "F4", "--node", "0"]), 1);
    assert_eq!(code(&["hasse", "--type", "G2", "--node", "3", "--format", "dot"]), 1);
    assert_eq!(code(&["verify-all", "--max-rank", "x"]), 1);
    assert_eq!(code(&["verify-all", "--max-rank", "9"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn certify_examples() {
    let row = |node: &str| json(&["certify", "--type", "F4", "--node", node])["payload"]["rows"][0].clone();
    let r4 = row("4");
    assert_eq!((r4["node"].as_u64(), r4["c1"].as_i64(), r4["dim_gamma"].as_u64()), (Some(4), Some(11), Some(10)));
    assert_eq!(r4["gw"], 1);
    let r3 = row("3");
    assert_eq!((r3["node"].as_u64(), r3["c1"].as_i64(), r3["dim_gamma"].as_u64()), (Some(3), Some(7), Some(6)));
    assert_eq!(r3["gw"], 1);

    let r = json(&["certify", "--type", "C", "--rank", "5", "--all-nodes"]);
    let rows = r["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for (k, row) in (1..=5).zip(rows) {
        assert_eq!(row["c1"].as_i64().unwrap(), 2 * 5 - k + 1);
    }
    assert_eq!(r["payload"]["all_certified"], true);
}

fn dot_edges(dot: &str) -> (BTreeSet<(usize, usize)>, Vec<(usize, String)>, Option<usize>) {
    let mut edges = BTreeSet::new();
    let mut labels = Vec::new();
    let mut max = None;
    for line in dot.lines().map(str::trim) {
        if let Some((a, b)) = line.strip_suffix(';').and_then(|l| l.split_once(" -> ")) {
            edges.insert((a[1..].parse().unwrap(), b[1..].parse().unwrap()));
        } else if let Some(rest) = line.strip_prefix('v') {
            let id: usize = rest.split_whitespace().next().unwrap().parse().unwrap();
            let label = rest.split('"').nth(1).unwrap().to_string();
            if line.contains("peripheries=2") {
                max = Some(id);
            }
            labels.push((id, label));
        }
    }
    (edges, labels, max)
}

#[test]
fn hasse_dot_and_json_agree() {
    for (node, len) in [("4", 10), ("3", 6)] {
        let j = json(&["hasse", "--type", "F4", "--node", node, "--format", "json"]);
        let p = &j["payload"];
        let max = p["maximum"].as_u64().unwrap() as usize;
        assert_eq!(p["vertices"][max]["length"].as_u64(), Some(len));
        let json_edges: BTreeSet<(usize, usize)> = p["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize))
            .collect();
        let out = run(&["hasse", "--type", "F4", "--node", node, "--format", "dot"]);
        assert!(out.status.success());
        let dot = String::from_utf8(out.stdout).unwrap();
        assert!(dot.starts_with("digraph") && dot.trim_end().ends_with('}'));
        let (dot_edges, labels, dot_max) = dot_edges(&dot);
        assert_eq!(dot_edges, json_edges);
        assert_eq!(dot_max, Some(max));
        for (id, label) in labels {
            assert_eq!(p["vertices"][id]["word"], label);
        }
        // The maximum is the only sink.
        let sinks: Vec<usize> = (0..p["vertices"].as_array().unwrap().len())
            .filter(|v| !json_edges.iter().any(|(a, _)| a == v))
            .collect();
        assert_eq!(sinks, vec![max]);
    }
}

#[test]
fn hasse_rank_one() {
    let j = json(&["hasse", "--type", "A1", "--node", "1"]);
    assert_eq!(j["payload"]["vertices"].as_array().unwrap().len(), 1);
    assert!(j["payload"]["edges"].as_array().unwrap().is_empty());
    assert_eq!(j["payload"]["vertices"][0]["word"], "s1");
}

#[test]
fn verify_all_sweeps() {
    let r = json(&["verify-all", "--max-rank", "4"]);
    let names: Vec<&str> =
        r["payload"]["types"].as_array().unwrap().iter().map(|t| t["type"].as_str().unwrap()).collect();
    for want in ["A1", "A4", "B2", "B4", "C2", "C4", "D4", "F4", "G2"] {
        assert!(names.contains(&want), "{want}");
    }
    assert!(r["payload"]["failures"].as_array().unwrap().is_empty());
    assert_eq!(r["payload"]["total"], r["payload"]["certified"]);

    let r = json(&["verify-all"]);
    let names: Vec<&str> =
        r["payload"]["types"].as_array().unwrap().iter().map(|t| t["type"].as_str().unwrap()).collect();
    for want in ["E6", "E7", "E8", "D8", "C8"] {
        assert!(names.contains(&want), "{want}");
    }
    assert_eq!(r["payload"]["total"], 163);
    assert_eq!(r["payload"]["certified"], 163);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify-all", "--max-rank", "6"][..],
        &["hasse", "--type", "E6", "--node", "2", "--format", "dot"],
        &["width", "--type", "G2", "--lambda", "3/2,-5"],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
