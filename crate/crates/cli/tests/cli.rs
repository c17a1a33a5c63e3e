use std::path::Path;
use std::process::{Command, Output};

use odiam::format::{parse_arc_list, parse_edge_list};
use odiam::graph::diameter;

fn odiam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_odiam"))
        .args(args)
        .env_remove("ODIAM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_writes_a_sorted_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    let out = odiam(&[
        "construct",
        "gnd",
        "--n",
        "8",
        "--d",
        "5",
        "-o",
        path_str(&file),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("8 12\n0 1\n"));
    assert_eq!(parse_edge_list(&text).unwrap().size(), 12);
}

#[test]
fn construct_out_of_range_is_a_usage_error() {
    let out = odiam(&["construct", "gnd", "--n", "7", "--d", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("out of range"));
}

#[test]
fn orient_with_verify_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("petersen.txt");
    let o = dir.path().join("arcs.txt");
    std::fs::write(
        &g,
        odiam::format::serialize_edge_list(&odiam::UndirectedGraph::petersen()),
    )
    .unwrap();
    let out = odiam(&[
        "orient",
        path_str(&g),
        "-o",
        path_str(&o),
        "--verify",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<&str> = report
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys.len(), 6);
    for k in ["n", "m", "method", "diameter", "bound", "holds"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(report["bound"], 8);
    assert_eq!(report["holds"], true);
    let arcs = parse_arc_list(&std::fs::read_to_string(&o).unwrap()).unwrap();
    assert_eq!(
        diameter(&arcs).finite(),
        report["diameter"].as_u64().map(|d| d as usize)
    );

    let text = odiam(&["diameter", path_str(&o)]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).starts_with("diameter "));
}

#[test]
fn orient_bridged_graph_explains_why() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("bridged.txt");
    // two copies of K4 joined by the bridge 3-4
    std::fs::write(
        &g,
        "8 13\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n",
    )
    .unwrap();
    let out = odiam(&[
        "orient",
        path_str(&g),
        "-o",
        path_str(&dir.path().join("o.txt")),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("only if it has no bridge"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn orient_hamiltonian_method() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k6.txt");
    std::fs::write(
        &g,
        odiam::format::serialize_edge_list(&odiam::UndirectedGraph::complete(6)),
    )
    .unwrap();
    let out = odiam(&[
        "orient",
        path_str(&g),
        "-o",
        path_str(&dir.path().join("o.txt")),
        "--method",
        "hamiltonian",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("hamiltonian-cycle"));
}

#[test]
fn verify_lower_on_h5() {
    let out = odiam(&["verify-lower", "h", "--n", "5", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("minimum diameter 4 over 64 orientations"));
}

#[test]
fn verify_lower_failure_prints_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c6.txt");
    std::fs::write(&g, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n").unwrap();
    let out = odiam(&["verify-lower", path_str(&g), "--d", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("lower bound fails"));
    assert!(stdout(&out).contains("6 6\n"));
}

#[test]
fn cap_from_flag_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k7.txt");
    std::fs::write(
        &g,
        odiam::format::serialize_edge_list(&odiam::UndirectedGraph::complete(7)),
    )
    .unwrap();
    let out = odiam(&["od", path_str(&g), "--cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_odiam"))
        .args(["od", path_str(&g)])
        .env("ODIAM_CAP", "12")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
    assert!(stderr(&env).contains("cap is 12"));
}

#[test]
fn od_on_graph6_input() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.g6");
    std::fs::write(&g, "C~\n").unwrap();
    let out = odiam(&["od", path_str(&g), "--graph6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["oriented_diameter"], 3);
    assert_eq!(v["examined"], 32);
}

#[test]
fn sweep_reports_threshold() {
    let out = odiam(&["sweep", "--n", "5", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("m_empirical(5, 3) = 8"));
    let json = odiam(&["sweep", "--n", "6", "--d", "2,4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["thresholds"][0]["threshold"]["value"], 14);
    assert_eq!(v["thresholds"][1]["threshold"]["value"], 9);
}

#[test]
fn order_seven_needs_extended_flag() {
    let out = odiam(&["sweep", "--n", "7", "--d", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(odiam(&[]).status.code(), Some(1));
    assert_eq!(odiam(&["nonsense"]).status.code(), Some(1));
    assert_eq!(odiam(&["diameter", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(odiam(&["--help"]).status.code(), Some(0));
}

#[test]
fn check_conjecture_order_six() {
    let out = odiam(&["check-conjecture", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("m_empirical(6, 3) = 11"));
}
