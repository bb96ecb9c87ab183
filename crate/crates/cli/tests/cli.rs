use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn gbls(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbls"))
        .args(args)
        .env("GBLS_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_k2_json() {
    let o = gbls(&["check", &fixture("k2.g6"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verdict"], "RankDeficient");
    assert_eq!(v["d_n"], "0");
}

#[test]
fn check_asymmetric_graph_is_certified() {
    let o = gbls(&["check", &fixture("asym6.g6")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict=Certified"), "{}", stdout(&o));
}

#[test]
fn check_truncated_accepts_flag() {
    let o = gbls(&["check", &fixture("c6.g6"), "--truncated", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["truncated"], true);
}

#[test]
fn compare_strongly_regular_pair() {
    let (s, r) = (fixture("shrikhande.g6"), fixture("rook44.g6"));
    let o = gbls(&["compare", &s, &r, "--variant", "wl2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "equivalent: true");
    let o = gbls(&["compare", &s, &r, "--variant", "gbls", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_ne!(v["outcome"], "not_equal");
}

#[test]
fn compare_hexagon_and_two_triangles() {
    let (a, b) = (fixture("c6.g6"), fixture("2c3.g6"));
    let o = gbls(&["compare", &a, &b, "--variant", "wl2"]);
    assert_eq!(stdout(&o).trim(), "equivalent: false");
    for variant in ["spectrum", "generalized", "gdls", "gbdls", "gbls", "gbls_truncated"] {
        let o = gbls(&["compare", &a, &b, "--variant", variant, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{variant}");
        let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        assert_eq!(v["outcome"], "not_equal", "{variant}");
    }
}

#[test]
fn snf_of_a_small_matrix() {
    let o = gbls(&["snf", &fixture("matrix.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("invariant factors: 2 6 12"), "{}", stdout(&o));
}

#[test]
fn orbits_of_the_hexagon() {
    let o = gbls(&["orbits", &fixture("c6.g6")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("orbits: 1"));
}

#[test]
fn experiment_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("log.csv");
    let csv = csv.to_str().unwrap();
    let a = gbls(&["experiment", "--n", "8", "--samples", "60", "--seed", "3", "--threads", "1", "--csv", csv]);
    let b = gbls(&["experiment", "--n", "8", "--samples", "60", "--seed", "3", "--threads", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["samples"], 60);
    let log = std::fs::read_to_string(csv).unwrap();
    assert_eq!(log.lines().count(), 61);
    assert!(log.starts_with("n,sample_index,d_n,verdict,delta_zero,ms"));
}

#[test]
fn exit_codes() {
    assert_eq!(gbls(&[]).status.code(), Some(1));
    assert_eq!(gbls(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gbls(&["--help"]).status.code(), Some(0));
    assert_eq!(gbls(&["--version"]).status.code(), Some(0));
    let k2 = fixture("k2.g6");
    assert_eq!(gbls(&["compare", &k2, &k2, "--variant", "nope"]).status.code(), Some(1));
    assert_eq!(gbls(&["experiment", "--n", "0", "--samples", "5"]).status.code(), Some(1));
    assert_eq!(gbls(&["check", &fixture("bad.g6")]).status.code(), Some(2));
    assert_eq!(gbls(&["check", &fixture("missing.g6")]).status.code(), Some(2));
    assert_eq!(gbls(&["snf", &fixture("bad_matrix.txt")]).status.code(), Some(2));
    assert_eq!(gbls(&["orbits", &fixture("shrikhande.g6")]).status.code(), Some(3));
    assert_eq!(gbls(&["experiment", "--n", "500", "--samples", "1"]).status.code(), Some(3));
}

#[test]
fn run_returns_codes_in_process() {
    assert_eq!(gbls_cli::run(["gbls", "snf", &fixture("matrix.txt")]), 0);
}
