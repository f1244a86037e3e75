use serde_json::Value;
use std::process::{Command, Output};

fn strata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strata")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = strata(&full);
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn euler_of_a1() {
    let o = strata(&["euler", "--family", "A1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), " 1 -2  2\n 0  1 -2\n 0  0  1\n");
    let v = json(&["euler", "--family", "A1"]);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["euler"], serde_json::json!([[1, -2, 2], [0, 1, -2], [0, 0, 1]]));
}

#[test]
fn ag_uses_shifted_p() {
    let o = strata(&["ag", "--family", "Bpr", "--p", "3", "--r", "2"]);
    assert_eq!(stdout(&o).trim(), "[5,7]");
}

#[test]
fn series_of_b2_has_two_lengths() {
    let v = json(&["series", "--family", "B", "--l", "2"]);
    assert_eq!(v["payload"]["lengths"], serde_json::json!([3, 4]));
}

#[test]
fn exit_codes() {
    assert_eq!(strata(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(strata(&["euler"]).status.code(), Some(2));
    assert_eq!(strata(&["reproduce", "no-such-table"]).status.code(), Some(2));
    let path = std::env::temp_dir().join(format!("strata-loop-{}.alg", std::process::id()));
    std::fs::write(&path, "algebra L { vertices 1; arrow x: 1 -> 1; relations x*x; }").unwrap();
    let o = strata(&["euler", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not unimodular"));
}

#[test]
fn json_is_deterministic() {
    let args = ["--json", "compare", "--family", "A1", "--other", "A2p"];
    let (a, b) = (strata(&args), strata(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["payload"]["separated"], true);
    assert_eq!(v["provenance"]["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn parse_round_trips() {
    let first = stdout(&strata(&["parse", "--family", "A2"]));
    let path = std::env::temp_dir().join(format!("strata-a2-{}.alg", std::process::id()));
    std::fs::write(&path, &first).unwrap();
    let second = stdout(&strata(&["parse", "--file", path.to_str().unwrap()]));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(first, second);
}

#[test]
fn second_algebra_specs() {
    let v = json(&["congruence", "--family", "A1", "--other", "A2", "--b", "[[-1,1,1],[-1,0,2],[0,0,1]]"]);
    assert_eq!(v["payload"]["congruent"], true);
    let v = json(&["glue", "--family", "B", "--l", "1", "--other", "B:l=1", "--at", "2", "--to", "1"]);
    assert!(v["payload"]["source"].as_str().unwrap().contains("vertices"));
}

#[test]
fn repetitive_anchors() {
    let w = ["--lo", "-10", "--hi", "12"];
    let run = |extra: &[&str]| {
        let mut args = vec!["repetitive"];
        args.extend_from_slice(extra);
        stdout(&strata(&args)).trim().to_string()
    };
    assert_eq!(run(&[&["omega"][..], &w, &["--word", "1 -a1> 2 -b2> 3"]].concat()), "2 -a2> 3 -b3> 4");
    assert_eq!(run(&[&["omega"][..], &w, &["--word", "1 -a1> 2 -b2> 3", "--power", "-1"]].concat()), "0 -a0> 1 -b1> 2");
    assert_eq!(run(&[&["tau"][..], &w, &["--word", "1 -a1> 2 -b2> 3", "--power", "2"]].concat()), "-1 -a-1> 0 -b0> 1");
}

#[test]
fn strings_commands() {
    let v = json(&["strings", "hom", "--family", "A1", "--from", "2", "--to", "1 -a1> 2"]);
    assert_eq!(v["payload"]["hom_dim"], 1);
    let v = json(&["strings", "extend", "--family", "A1", "--from", "2 -b2> 3", "--to", "1 -a1> 2"]);
    let ext = &v["payload"]["extensions"][0];
    assert_eq!(ext["m2"], "1 -a1> 2 -b2> 3");
    assert_eq!(ext["exact"], true);
}

#[test]
fn reproduce_small_tables() {
    for id in ["euler-matrices", "congruence-B", "graded-end-G", "corners"] {
        let o = strata(&["reproduce", id]);
        assert!(o.status.success(), "{id}: {}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.starts_with("pass")));
    }
}
