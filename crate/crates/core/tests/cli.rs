use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn subdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subdeg")).args(args).output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn subdegrees_of_m11_on_eleven_points() {
    let dir = tempfile::tempdir().unwrap();
    let m11 = write(dir.path(), "m11.grp", include_str!("../data/mathieu11.grp"));
    let out = subdeg(&["subdegrees", &m11, "--coprime"]);
    assert_eq!(out.status.code(), Some(0));
    let v = &json_lines(&out)[0];
    assert_eq!(v["subdegrees"], serde_json::json!([1, 10]));
    assert_eq!(v["stabilizer_order"], 720);
    assert_eq!(v["coprime_pairs"], serde_json::json!([]));
}

#[test]
fn orbit_of_a_point() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.grp", "degree 5\ngen (1 2)(3 4)\n");
    let v = &json_lines(&subdeg(&["orbits", &g, "--point", "3"]))[0];
    assert_eq!(v["orbit"], serde_json::json!([3, 4]));
    assert_eq!(v["stabilizer_order"], 1);
}

#[test]
fn coprime_orbit_lengths_of_a_module() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c.grp", "field 5\ndim 1\ngen [[2]]\n");
    let v = &json_lines(&subdeg(&["coprime", &g]))[0];
    assert_eq!(v["values"], serde_json::json!([1, 4]));
}

#[test]
fn factorization_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write(dir.path(), "s3.grp", "degree 3\ngen (1 2)\ngen (1 2 3)\n");
    let c3 = write(dir.path(), "c3.grp", "degree 3\ngen (1 2 3)\n");
    let c2 = write(dir.path(), "c2.grp", "degree 3\ngen (1 2)\n");
    assert_eq!(subdeg(&["factor", &s3, "--a", &c3, "--b", &c2]).status.code(), Some(0));
    assert_eq!(subdeg(&["factor", &s3, "--a", &c3, "--b", &c3]).status.code(), Some(1));
}

#[test]
fn coset_action_writes_a_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let s4 = write(dir.path(), "s4.grp", "degree 4\ngen (1 2)\ngen (1 2 3 4)\n");
    let v4 = write(dir.path(), "v4.grp", "degree 4\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n");
    let out = dir.path().join("s3.grp");
    let r = subdeg(&["coset-action", &s4, "--sub", &v4, "-o", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(json_lines(&r)[0]["index"], 6);
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("degree 6") && text.contains("order 6"), "{text}");
}

#[test]
fn verify_streams_a_versioned_report() {
    let out = subdeg(&["verify", "ex3.1-p2"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines[0]["format"], "subdeg-report/1");
    let last = lines.last().unwrap();
    assert_eq!(last["status"], "pass");
    assert!(String::from_utf8_lossy(&out.stderr).contains("running ex3.1-p2"));
}

#[test]
fn missing_data_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = subdeg(&["verify", "ex4.2-j1", "--data", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.grp", "degree 3\ngen (1 4)\n");
    let out = subdeg(&["subdegrees", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(subdeg(&["verify", "no-such-case"]).status.code(), Some(2));
    assert_eq!(subdeg(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn list_cases_is_json() {
    let cases = json_lines(&subdeg(&["list-cases"]));
    assert!(cases.len() > 20);
    assert!(cases.iter().all(|c| c["id"].is_string()));
}
