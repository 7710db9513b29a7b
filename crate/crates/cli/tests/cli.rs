use std::process::{Command, Output};

use serde_json::Value;

fn instanton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_instanton")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn certify_sample_is_smooth() {
    let out = instanton(&["certify", "--sample", "5,2", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["certificate"]["verdicts"]["coh_table"]["s2"]["h2"], 0);
    assert_eq!(v["certificate"]["smooth"], true);
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn outputs_are_reproducible() {
    let a = instanton(&["certify", "--sample", "3,4", "--seed", "3"]);
    let b = instanton(&["certify", "--sample", "3,4", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let c = instanton(&["certify", "--sample", "3,4", "--seed", "4"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn certify_rank6_degenerate_records_degenerate() {
    let out = instanton(&["certify", "--example", "prop51"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["certificate"]["verdicts"]["nondegeneracy"]["status"], "degenerate");
    assert_eq!(v["certificate"]["verdicts"]["rank"], 6);
    assert_eq!(v["certificate"]["modular"], false);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\": 2, \"entries\": [").unwrap();
    let out = instanton(&["certify", "--tensor", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(out.stderr.trim_ascii()).unwrap();
    assert_eq!(err["error"], "input");
    assert_eq!(instanton(&["certify", "--tensor", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(instanton(&["certify", "--field", "fp:12", "--example", "nc"]).status.code(), Some(2));
    assert_eq!(instanton(&["certify", "--sample", "9,2"]).status.code(), Some(2));
    assert_eq!(instanton(&["certify", "--example", "nosuch"]).status.code(), Some(2));
    assert_eq!(instanton(&["certify"]).status.code(), Some(2));
    assert_eq!(instanton(&["certify", "--example", "nc", "--xi", "1,2,3"]).status.code(), Some(2));
}

#[test]
fn nc_cohomology_table() {
    let out = instanton(&["table", "coh", "--example", "nc", "--dmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("# instanton "));
    assert!(text.contains("d,h0,h1\n"));
    let rows = csv_rows(&out);
    let want = [["-2", "0", "0"], ["-1", "0", "1"], ["0", "0", "0"], ["1", "5", "0"]];
    for (row, w) in rows.iter().zip(want) {
        assert_eq!(row, &w);
    }
    assert_eq!(rows.len(), 6);
}

#[test]
fn full_rank_has_no_h1_in_nonnegative_degrees() {
    let out = instanton(&["table", "coh", "--sample", "3,6", "--dmax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    for row in csv_rows(&out) {
        if row[0].parse::<i64>().unwrap() >= 0 {
            assert_eq!(row[2], "0");
        }
    }
}

#[test]
fn pencil_has_degree_n() {
    let out = instanton(&["--json", "table", "lines", "--sample", "5,2", "--pencil", "random"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["pencil"]["degree"], 5);
    let out = instanton(&["table", "lines", "--example", "nc", "--pencil", "1,0,0,0;0,1,0,0;0,0,1,0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn line_table() {
    let out = instanton(&["table", "lines", "--sample", "3,2", "--lines", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("plucker,order,h0,det\n"));
    assert_eq!(csv_rows(&out).len(), 12);
}

#[test]
fn sample_file_reads_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let p = path.to_str().unwrap();
    assert_eq!(instanton(&["sample", "--sample", "4,2", "--seed", "5", "--out", p]).status.code(), Some(0));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file["rank"], 10);
    let out = instanton(&["certify", "--tensor", p]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["certificate"]["subject"]["hash"], file["hash"]);
    // the file is over F_32003
    assert_eq!(instanton(&["certify", "--field", "rational", "--tensor", p]).status.code(), Some(2));
}

#[test]
fn export_named_example() {
    let out = instanton(&["--field", "rational", "export", "--id", "thooft(4)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["tensor"]["field"], "rational");
    assert_eq!(v["rank"], 10);
    assert_eq!(v["config"]["input"]["example"], "thooft(4)");
}

#[test]
fn suite_filters() {
    let out = instanton(&["suite", "--only", "thooft"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("criterion")).count(), 1);
    assert!(text.contains("criterion  2"));
    let out = instanton(&["--field", "rational", "--json", "suite", "--only", "named-examples"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["suite"]["field"], "rational");
    assert_eq!(v["suite"]["results"].as_array().unwrap().len(), 4);
    assert_eq!(instanton(&["suite", "--only", "nothing"]).status.code(), Some(2));
}
