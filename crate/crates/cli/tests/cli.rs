use std::path::PathBuf;
use std::process::{Command, Output};

use wurst::sset::constructions::{boundary, standard_simplex};
use wurst::SimplicialSet;

fn wurst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wurst"))
        .args(args)
        .env_remove("WURST_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wurst-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_space(name: &str, x: &SimplicialSet) -> String {
    let p = scratch(name);
    std::fs::write(&p, x.to_json()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn build_q_round_trips_through_json() {
    let o = wurst(&[
        "build", "q", "--i", "1", "--j", "1", "--cap", "2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let x = SimplicialSet::from_json(&stdout(&o)).unwrap();
    // Q(1,1) is a square: four vertices, five edges, two triangles.
    assert_eq!(x.nondegenerate_counts(), vec![4, 5, 2]);
}

#[test]
fn build_table_summary() {
    let o = wurst(&["build", "simplex", "--n", "2", "--cap", "2"]);
    assert_eq!(
        stdout(&o),
        "cap 2\ncounts [3, 6, 10]\nnondegenerate [3, 3, 1]\n"
    );
}

#[test]
fn out_flag_writes_file() {
    let p = scratch("w1.json");
    let o = wurst(&[
        "build",
        "w",
        "--n",
        "1",
        "--cap",
        "2",
        "--format",
        "json",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let x = SimplicialSet::from_json(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(x.nondegenerate_counts(), vec![3, 2, 0]);
}

#[test]
fn homology_of_circle() {
    let s = write_space("circle.json", &boundary(2, 3));
    let o = wurst(&["homology", "--space", &s, "--upto", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k\tbetti\ttorsion\n0\t1\t-\n1\t1\t-\n2\t0\t-\n");
    let o = wurst(&["homology", "--space", &s, "--upto", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn iso_exit_codes() {
    let a = write_space("d1.json", &standard_simplex(1, 2));
    let b = write_space("sd1.json", &boundary(1, 2));
    assert_eq!(wurst(&["iso", &a, &a]).status.code(), Some(0));
    assert_eq!(wurst(&["iso", &a, &b]).status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    for suite in [
        "reedy-q",
        "reedy-w",
        "sigma",
        "nullhomotopy",
        "flip",
        "dec-equivalence",
    ] {
        let o = wurst(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).ends_with(" 0 failed\n"));
    }
}

#[test]
fn verify_against_simplicial_set_input() {
    let k = write_space("k.json", &standard_simplex(1, 3));
    for suite in ["tautological", "op-symmetry"] {
        let o = wurst(&["verify", suite, "--cat", &k]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
}

#[test]
fn joins_fail_pullback_condition() {
    let o = wurst(&["verify", "pullback", "--coeff", "joins"]);
    assert_eq!(o.status.code(), Some(1));
    let o = wurst(&["verify", "pullback", "--coeff", "q", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn partition_on_pointed_output() {
    let p = scratch("j.json");
    let o = wurst(&[
        "build",
        "j",
        "--i",
        "1",
        "--j",
        "1",
        "--format",
        "json",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = wurst(&["verify", "partition", "--space", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn hom_accepts_labels_and_indices() {
    let k = write_space("d1h.json", &standard_simplex(1, 3));
    let a = wurst(&[
        "hom", "--space", &k, "--x", "v0", "--y", "1", "--format", "json",
    ]);
    let b = wurst(&[
        "build", "hom", "--space", &k, "--x", "0", "--y", "v1", "--format", "json",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    // Hom(0,1) in Δ^1 is a point.
    let h = SimplicialSet::from_json(&stdout(&a)).unwrap();
    assert_eq!(h.nondegenerate_counts()[0], 1);
    assert_eq!(
        wurst(&["hom", "--space", &k, "--x", "0", "--y", "7"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn safe_bounds_and_budget() {
    assert_eq!(
        wurst(&["build", "q", "--i", "4", "--j", "4"]).status.code(),
        Some(2)
    );
    let k = write_space("d1b.json", &standard_simplex(1, 3));
    let o = Command::new(env!("CARGO_BIN_EXE_wurst"))
        .args(["build", "nerve", "--cat", &k])
        .env("WURST_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn malformed_input_is_exit_2() {
    let p = scratch("bad.json");
    std::fs::write(&p, "{\"cap\": 1}").unwrap();
    assert_eq!(
        wurst(&["homology", "--space", p.to_str().unwrap(), "--upto", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        wurst(&["homology", "--space", "/nonexistent", "--upto", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let a = wurst(&["verify", "reedy-q", "--max", "2", "--format", "json"]);
    let b = wurst(&["verify", "reedy-q", "--max", "2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
