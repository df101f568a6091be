use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gauss-universal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn check(degree: usize, points: &str) -> Output {
    run(&["check", "--degree", &degree.to_string(), "--points", "-"], points)
}

#[test]
fn factor_five() {
    let out = run(&["factor", "5"], "");
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), r#"{"factors":[[[2,1],1],[[1,2],1]],"unit":[0,-1],"version":"0.1.0"}"#);
}

#[test]
fn factor_rejects_zero_and_garbage() {
    assert_eq!(code(&run(&["factor", "0"], "")), 2);
    assert_eq!(code(&run(&["factor", "1+j"], "")), 2);
}

#[test]
fn volume_of_three_points() {
    let out = run(&["volume", "--points", "-"], "[[0,0],[1,0],[0,1]]");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["value"], serde_json::json!([1, 1]));
    assert_eq!(v["norm"], 2);
}

#[test]
fn example_sets_exit_zero() {
    let cases = [
        (1, "[[0,0],[1,0]]"),
        (2, "[[0,0],[1,0],[0,1]]"),
        (3, "[[0,0],[1,0],[0,1],[1,1]]"),
        (5, "[[0,0],[1,0],[2,0],[0,1],[1,1],[2,1]]"),
    ];
    for (n, points) in cases {
        let out = check(n, points);
        assert_eq!(code(&out), 0, "degree {n}");
        let v = json(&out);
        assert_eq!(v["verdict"], "universal");
        assert_eq!(v["oracle"], true);
    }
}

#[test]
fn collinear_triple_has_a_witness() {
    let out = check(2, "[[0,0],[1,0],[2,0]]");
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["verdict"], "not_universal");
    assert_eq!(v["failure"]["prime_power"], serde_json::json!([[1, 1], 2]));
    // x(x-1)/2 evaluated at i
    assert_eq!(v["witness"]["coefficients"], serde_json::json!([[[0, 0], 1], [[-1, 0], 2], [[1, 0], 2]]));
    assert_eq!(v["witness"]["point"], serde_json::json!([0, 1]));
    assert_eq!(v["oracle"], false);
}

#[test]
fn superset_check_uses_sufficient_condition() {
    let out = check(2, "[[0,0],[1,0],[-1,0],[0,1],[0,-1]]");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "certified_universal_sufficient");
    assert_eq!(v["oracle"], Value::Null);
}

#[test]
fn input_errors_exit_two() {
    let bad = [
        (vec!["check", "--degree", "1", "--points", "-"], "[[0,0],[0,0]]"),
        (vec!["check", "--degree", "1", "--points", "-"], "[[0,0],[1,"),
        (vec!["check", "--degree", "1", "--points", "-"], "[]"),
        (vec!["check", "--degree", "3", "--points", "-"], "[[0,0],[1,0]]"),
        (vec!["check", "--points", "-"], "[[0,0],[1,0]]"),
        (vec!["check", "--degree", "1", "--points", "/nonexistent/points.json"], ""),
        (vec!["volume", "--points", "-", "--format", "csv"], "[[0,0]]"),
        (vec!["search", "--degree", "3", "--max-cardinality", "2"], ""),
        (vec!["search", "--degree", "1", "--box", "3by3"], ""),
        (vec!["growth", "--degree", "2", "--from", "3"], ""),
        (vec!["bogus"], ""),
    ];
    for (args, stdin) in bad {
        let out = run(&args, stdin);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn reports_are_byte_deterministic() {
    for args in [vec!["construct", "--degree", "3"], vec!["search", "--degree", "2", "--box", "3x3"]] {
        let a = run(&args, "");
        let b = run(&args, "");
        assert_eq!(a.stdout, b.stdout);
        let again = run(&[&["--jobs", "1"], &args[..]].concat(), "");
        assert_eq!(a.stdout, again.stdout);
    }
}

#[test]
fn keys_are_sorted_and_versioned() {
    let out = run(&["construct", "--degree", "1"], "");
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let v = json(&out);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["cardinality", "certificate", "degree", "per_prime", "points", "radius_norm", "version"]);
    assert!(text.starts_with(r#"{"cardinality":"#));
    assert!(no_floats(&v));
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_i64() || n.is_u64(),
        Value::Array(a) => a.iter().all(no_floats),
        Value::Object(m) => m.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn constructed_points_recertify() {
    let out = run(&["construct", "--degree", "4"], "");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["certificate"]["verdict"], "certified_universal_sufficient");
    assert_eq!(v["cardinality"].as_u64().unwrap(), v["points"].as_array().unwrap().len() as u64);
    assert!(v["per_prime"].as_array().unwrap().iter().all(|p| p["contained"] == true));
    let again = check(4, &v["points"].to_string());
    assert_eq!(code(&again), 0);
    assert_eq!(json(&again)["verdict"], "certified_universal_sufficient");
}

#[test]
fn searched_points_recertify() {
    let out = run(&["search", "--degree", "3", "--box", "3x3"], "");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["cardinality"], 4);
    assert_eq!(v["exhaustive"], true);
    let again = check(3, &v["found"].to_string());
    assert_eq!(code(&again), 0);
    assert_eq!(json(&again)["verdict"], "universal");
}

#[test]
fn search_without_result_exits_one() {
    let out = run(&["search", "--degree", "4", "--box", "6x6", "--max-cardinality", "5"], "");
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["found"], Value::Null);
    assert_eq!(v["exhaustive"], true);
}

#[test]
fn growth_csv_rows() {
    let out = run(&["growth", "--degree", "3", "--format", "csv"], "");
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "degree,min_cardinality,ratio,box,exhaustive");
    assert_eq!(&lines[1..], ["1,2,2/1,5x5,true", "2,3,3/2,6x6,true", "3,4,4/3,6x6,true"]);
}

#[test]
fn growth_json_rows() {
    let out = run(&["growth", "--degree", "2", "--box", "3x3"], "");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["rows"][1]["ratio"], "3/2");
    assert_eq!(v["rows"][1]["box"], "3x3");
}

#[test]
fn large_components_travel_as_strings() {
    let out = run(&["volume", "--points", "-"], r#"[["123456789012345678901",0],[0,0]]"#);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["value"], serde_json::json!(["123456789012345678901", 0]));
}
