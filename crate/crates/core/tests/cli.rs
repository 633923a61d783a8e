use std::path::Path;
use std::process::{Command, Output};

fn ptcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptcut")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const K3: &str = "p edge 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n";

#[test]
fn decide_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.graph", K3);
    let yes = ptcut(&["decide", "-k", "0", &k3]);
    assert_eq!((yes.status.code(), stdout(&yes).trim()), (Some(0), "yes"));
    let no = ptcut(&["decide", "-k", "1", &k3]);
    assert_eq!((no.status.code(), stdout(&no).trim()), (Some(1), "no"));
    assert_eq!(ptcut(&["decide", "--quarters", "1", &k3]).status.code(), Some(1));
    assert_eq!(ptcut(&["decide", "--target", "2", &k3]).status.code(), Some(0));
    assert_eq!(ptcut(&["decide", "--target", "3", &k3]).status.code(), Some(1));
}

#[test]
fn bound_line() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = dir.path().join("k5.graph");
    let k5 = k5.to_str().unwrap();
    assert_eq!(ptcut(&["gen", "odd-clique", "2", "-o", k5]).status.code(), Some(0));
    let o = ptcut(&["bound", k5]);
    assert_eq!(stdout(&o).trim(), "PT=24/4 (=6), EE=24/4 (=6)");
}

#[test]
fn solve_emits_cut() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("tree.graph");
    let tree = tree.to_str().unwrap();
    ptcut(&["gen", "obs6-tree", "8", "-o", tree]);
    let cut_path = dir.path().join("cut.json");
    let o = ptcut(&["solve", "-k", "4", "--emit-cut", cut_path.to_str().unwrap(), tree]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], 16);
    let file: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cut_path).unwrap()).unwrap();
    assert_eq!(file, v);
    assert!(v["side1"].as_array().unwrap().iter().all(|x| (1..=9).contains(&x.as_i64().unwrap())));

    let o = ptcut(&["solve", "-k", "5", tree]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "no"));
}

#[test]
fn oracle_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.graph", K3);
    let o = ptcut(&["oracle", &k3]);
    assert_eq!(stdout(&o).trim(), r#"{"value":2,"side1":[2]}"#);

    let c5 = dir.path().join("c5.graph");
    ptcut(&["gen", "rule-gallery", "6", "-o", c5.to_str().unwrap()]);
    let o = ptcut(&["trace", "-k", "1", c5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records[0]["rule_id"], 6);
    assert_eq!(records.last().unwrap()["k_after"], 3);
}

#[test]
fn errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.graph", "p edge 2 1\ne 1 1 1\n");
    let o = ptcut(&["decide", "-k", "0", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-loop"));
    assert_eq!(ptcut(&["decide", "-k", "0", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(ptcut(&["decide", &bad]).status.code(), Some(2));
    assert_eq!(ptcut(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ptcut(&["gen", "odd-clique", "0"]).status.code(), Some(2));
    let big = dir.path().join("big.graph");
    ptcut(&["gen", "random", "--n", "30", "--m", "40", "-o", big.to_str().unwrap()]);
    assert_eq!(ptcut(&["oracle", big.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(ptcut(&["--help"]).status.code(), Some(0));
}
