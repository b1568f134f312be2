use std::process::{Command, Output};

use nm34::formats::{from_graph6, from_json};
use nm34_core::constructions::{build_nm34, build_no_plus, Nm34Representation};
use nm34_core::graph::srg_params;
use serde_json::Value;

fn nm34(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nm34"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_no_plus_writes_one_graph6_line() {
    let o = nm34(&["build", "no-plus", "--n", "3", "--format", "graph6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = from_graph6(text.trim()).unwrap();
    assert_eq!(g.n(), 28);
    assert!(g.same_edges(&build_no_plus(3).unwrap()));
}

#[test]
fn build_nm34_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let o = nm34(&[
        "build",
        "nm34",
        "--rep",
        "matrix-sum",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let g = from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g, build_nm34(Nm34Representation::MatrixSum));
    assert!(g.labels().unwrap().iter().all(|l| l.len() == 6));
}

#[test]
fn build_hat_has_seven_components() {
    let o = nm34(&["build", "hat", "--side", "nm34"]);
    let g = from_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(g.connected_components().len(), 7);
    let dot = stdout(&nm34(&["build", "kneser", "--format", "dot"]));
    assert!(dot.starts_with("graph \"K(8,2)\"") && dot.contains("label=\"{0,1}\""));
}

#[test]
fn verify_srg_json_report() {
    let o = nm34(&["verify", "srg", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["failed"], 0);
    let entries = v["entries"].as_array().unwrap();
    let ids: Vec<&str> = entries
        .iter()
        .map(|e| e["claim_id"].as_str().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert!(entries[0]["measured"]
        .as_str()
        .unwrap()
        .contains("{15:1, 1:20, -5:7}"));
}

#[test]
fn verify_counts_for_q3() {
    let o = nm34(&["verify", "counts", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("q=3: |det = 0| = 130"));
}

#[test]
fn verify_table_reports_conventions() {
    let text = stdout(&nm34(&["verify", "table"]));
    assert!(
        text.contains("documented convention preserves all 378 adjacencies"),
        "{text}"
    );
    assert!(text.contains("NO+[canonical] left->right NM34[quadric-minus-n]"));
}

#[test]
fn json_reports_are_deterministic_modulo_timing() {
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        for e in v["entries"].as_array_mut().unwrap() {
            e["elapsed_ms"] = Value::Null;
        }
        v
    };
    let a = strip(nm34(&["verify", "counts", "--json"]));
    let b = strip(nm34(&["verify", "counts", "--json"]));
    assert_eq!(a, b);
}

#[test]
fn orbit_report_shape() {
    let o = nm34(&["orbits", "--q", "2"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q"], 2);
    assert_eq!(v["sizes"], serde_json::json!([7, 7, 21, 28]));
    assert_eq!(v["members"]["O4"].as_array().unwrap().len(), 28);
}

#[test]
fn exit_codes() {
    assert_eq!(
        nm34(&["build", "no-plus", "--n", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        nm34(&["build", "no-plus", "--rep", "matrix-sum"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(nm34(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(nm34(&["orbits", "--q", "9"]).status.code(), Some(2));
    assert_eq!(
        nm34(&["build", "no-plus", "--out", "/nonexistent/dir/g6"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn inspect_round_trips_built_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    let lines: Vec<String> = ["no-plus", "nm34", "kneser"]
        .iter()
        .map(|t| stdout(&nm34(&["build", t])).trim().to_string())
        .collect();
    std::fs::write(&path, lines.join("\n")).unwrap();
    let o = nm34(&["inspect", path.to_str().unwrap()]);
    let text = stdout(&o);
    assert_eq!(text.matches("isomorphic to NO+(6,2)").count(), 3, "{text}");
    for l in &lines {
        assert_eq!(srg_params(&from_graph6(l).unwrap()).unwrap().v, 28);
    }
}
