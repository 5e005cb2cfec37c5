use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxorbit")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn a3_quotient_dot_has_twelve_nodes_and_twenty_two_edges() {
    let out = run(&["poset", "--type", "A", "--rank", "3", "--I", "1", "--J", "3", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph poset {"));
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 12);
    assert_eq!(text.lines().filter(|l| l.contains("->")).count(), 22);
}

#[test]
fn poset_json_is_well_formed() {
    let out = run(&["poset", "--type", "B", "--rank", "4", "--I", "1", "--J", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let nodes = v["nodes"].as_array().unwrap();
    assert!(!nodes.is_empty());
    for e in v["edges"].as_array().unwrap() {
        let (a, b) = (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize);
        assert_eq!(nodes[b]["length"].as_u64().unwrap(), nodes[a]["length"].as_u64().unwrap() + 1);
    }
}

#[test]
fn poset_output_is_deterministic() {
    let args = ["poset", "--type", "D", "--rank", "4", "--I", "1", "--J", "3"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn poset_writes_to_a_file() {
    let path = std::env::temp_dir().join(format!("coxorbit-poset-{}.dot", std::process::id()));
    let out = run(&["poset", "--nr", "4", "2", "--format", "dot", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("->")).count(), 22);
}

#[test]
fn compare_reports_witness_and_sequences() {
    let out = run(&["compare", "--nr", "4", "2", "1", "3 2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("s1 <=_O s3 s2"), "{text}");
    assert!(text.contains("d_lower <=_D d_upper: true"));
    assert!(text.contains("S(lower) = (0 0 2 1)"));
}

#[test]
fn compare_exits_one_when_incomparable() {
    let out = run(&["compare", "--nr", "4", "2", "--perm", "2 1 3 4", "1 3 2 4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("incomparable"));
}

#[test]
fn classify_g2_pair_has_height_four() {
    let out = run(&["classify", "--type", "G", "--rank", "2", "--root", "3 2", "--root", "1 0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("height: 4"));
    assert!(text.contains("spherical: no"));
}

#[test]
fn classify_json_carries_the_report() {
    let out = run(&[
        "classify", "--type", "E", "--rank", "6", "--root", "1 2 2 3 2 1", "--root", "1 0 1 1 1 1", "--root",
        "0 0 0 1 0 0", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["height"], 3);
    assert_eq!(v["rationally_orthogonal"], true);
    assert_eq!(v["involution"]["folded_type"], "A2(diag) x A1");
}

#[test]
fn classify_rejects_non_orthogonal_roots() {
    let out = run(&["classify", "--type", "A", "--rank", "3", "--root", "1 0 0", "--root", "0 1 0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_rejects_a_non_root() {
    let out = run(&["classify", "--type", "A", "--rank", "3", "--root", "1 0 1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbits_table_for_four_two() {
    let out = run(&["orbits", "--n", "4", "--r", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 13);
    let json = run(&["orbits", "--n", "4", "--r", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 12);
}

#[test]
fn orbits_reject_rank_too_large() {
    assert_eq!(run(&["orbits", "--n", "5", "--r", "3"]).status.code(), Some(2));
}

#[test]
fn cascade_in_type_a_is_a_chain() {
    let out = run(&["cascade", "--type", "A", "--rank", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("4 nodes, depth 3"));
}

#[test]
fn cap_is_enforced() {
    assert_eq!(run(&["poset", "--type", "E", "--rank", "8", "--cap", "1000"]).status.code(), Some(3));
}

#[test]
fn invalid_datum_is_a_usage_error() {
    let out = run(&["poset", "--type", "A", "--rank", "3", "--I", "1 2", "--J", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_on_a_small_quotient() {
    let out = run(&["selftest", "--nr", "4", "2", "--coxeter", "B3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("4 of 4 checks passed"));
}
