use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pi-lattice")).args(args).env("PI_LATTICE_THREADS", "2").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn counts(report: &Value) -> Vec<u64> {
    report["reports"].as_array().unwrap().iter().map(|r| r["per_q"][0]["count"].as_u64().unwrap()).collect()
}

#[test]
fn ut2_codimensions() {
    let v = json(&["codim", "--ring", "ut2:2,2", "--n", "2..5"]);
    assert_eq!(v["schema"], "pi-lattice/1");
    assert_eq!(v["ring"], "ut2:2,2");
    assert_eq!(counts(&v), vec![2, 6, 18, 50]);
    assert_eq!(v["reports"][0]["per_q"][0]["q"], 2);
    assert_eq!(v["reports"][3]["invariants"]["free_rank"], 0);
}

#[test]
fn integers_are_free_of_rank_one() {
    let v = json(&["codim", "--ring", "cyclic:0", "--n", "3"]);
    assert_eq!(v["reports"][0]["invariants"]["free_rank"], 1);
    assert_eq!(v["reports"][0]["per_q"][0]["q"], 0);
}

#[test]
fn grassmann_proper_degree_four() {
    let v = json(&["codim", "--ring", "grassmann:3,5", "--n", "4", "--proper"]);
    let r = &v["reports"][0];
    assert_eq!(r["kind"], "proper");
    assert_eq!(r["invariants"]["torsion"], serde_json::json!([3]));
}

#[test]
fn q_filter_and_csv() {
    let out = run(&["codim", "--ring", "ut2:4,2", "--n", "2..3", "--q", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["ring,n,kind,q,count", "\"ut2:4,2\",2,ordinary,2,1", "\"ut2:4,2\",3,ordinary,2,5"]);
}

#[test]
fn specht_commands() {
    let v = json(&["specht", "rank", "--lambda", "3,2"]);
    assert_eq!(v["rank"], 5);
    assert_eq!(v["hook_formula"], 5);
    let v = json(&["specht", "filtrate", "--lambda", "2,1", "--n", "5", "--m", "0"]);
    assert_eq!(v["factors"].as_array().unwrap().len(), 4);
    let v = json(&["specht", "filtrate", "--lambda", "1,1", "--n", "3", "--m", "2"]);
    let mut torsion: Vec<Value> = v["factors"].as_array().unwrap().iter().map(|f| f["invariants"]["torsion"].clone()).collect();
    torsion.sort_by_key(|t| t.as_array().unwrap().len());
    assert_eq!(torsion, vec![serde_json::json!([2]), serde_json::json!([2, 2])]);
    let v = json(&["specht", "series", "--lambda", "1,1", "--mu", "1,1,1"]);
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "young", "--n-max", "6"],
        vec!["verify", "specht.torsionfree", "--n-max", "6"],
        vec!["verify", "proper-ordinary", "--ring", "ut2:2,2", "--n-max", "5"],
    ] {
        let v = json(&args);
        assert_eq!(v["pass"], true, "{args:?}");
        assert!(v["outcomes"].as_array().unwrap().iter().all(|o| o["pass"] == true));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["codim", "--ring", "ut2:4,3"]).status.code(), Some(1));
    assert_eq!(run(&["codim", "--ring", "bogus"]).status.code(), Some(1));
    assert_eq!(run(&["codim"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "no-such-claim"]).status.code(), Some(1));
    assert_eq!(run(&["codim", "--ring", "ut2:2,2", "--n", "5..2"]).status.code(), Some(1));
    assert_eq!(run(&["codim", "--ring", "ut2:2,2", "--n", "4", "--q", "6"]).status.code(), Some(1));
    let out = run(&["codim", "--ring", "ut2:2,2", "--n", "4", "--row-budget", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn reports_are_byte_stable() {
    let args = ["codim", "--ring", "sum:[cyclic:2,ut2:3,3]", "--n", "1..4"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn golden_report() {
    let out = run(&["codim", "--ring", "ut2:2,2", "--n", "2..3"]);
    let golden = include_str!("golden/codim_ut2_2_2.json");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn writes_to_file() {
    let path = std::env::temp_dir().join(format!("pi-lattice-cli-{}.json", std::process::id()));
    let out = run(&["specht", "rank", "--lambda", "2,1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rank"], 2);
    std::fs::remove_file(path).unwrap();
}
