use std::process::{Command, Output};

use serde_json::Value;

fn olevel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_olevel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}

#[test]
fn level_check_exit_codes() {
    let o = olevel(&["level-check", "--seq", "1,3,6,8,9,9,9,10"]);
    assert_eq!(o.status.code(), Some(10));
    assert!(stdout(&o).contains("NotLevel via T062"));

    let o = olevel(&["level-check", "--seq", "1,3,3,1"]);
    assert_eq!(o.status.code(), Some(0));

    let o = olevel(&["level-check", "--seq", "1,3,6,11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an O-sequence"));

    let o = olevel(&["level-check", "--seq", "2,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn level_check_json_schema() {
    let o = olevel(&["--json", "level-check", "--seq", "1,3,6,8,9,9,9,10"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["verdict"], "NotLevel");
    assert_eq!(v["criterion"], "T062");
    assert_eq!(
        (v["d"].as_u64(), v["s"].as_u64(), v["i"].as_i64()),
        (Some(4), Some(3), Some(3))
    );
    assert_eq!(v["socle_degrees"], serde_json::json!([5]));
    assert!(v["evidence"].as_array().unwrap().len() >= 2);

    let o = olevel(&["--json", "level-check", "--seq", "1,3,6,10,15,21,18,17,17"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["verdict"], "Unknown");
    assert!(v["criterion"].is_null());
}

#[test]
fn corpus_input() {
    let dir = std::env::temp_dir().join(format!("olevel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.txt");
    std::fs::write(&path, "# examples\n1,3,3,1\n\n1,3,2,2  # drop then flat\n").unwrap();
    let o = olevel(&["--json", "level-check", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(10));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["criterion"], "P006");

    std::fs::write(&path, "1,3,6\n1,3,x\n").unwrap();
    let o = olevel(&["validate", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn validate_reports_violation() {
    let o = olevel(&["--json", "validate", "--seq", "1,3,6,11"]);
    assert_eq!(o.status.code(), Some(1));
    let v = &json_lines(&o)[0];
    assert_eq!(v["valid"], false);
    assert_eq!(v["violation"]["degree"], 3);
    assert_eq!(v["violation"]["bound"], "10");
    assert_eq!(
        olevel(&["validate", "--seq", "1,3,6,10"]).status.code(),
        Some(0)
    );
}

#[test]
fn growth_output() {
    let o = olevel(&["growth", "--value", "16", "--degree", "7"]);
    assert!(stdout(&o).contains("16^<7> = 18"));
    let o = olevel(&["--json", "growth", "--value", "0", "--degree", "5"]);
    assert_eq!(json_lines(&o)[0]["growth"], "0");
    assert_eq!(
        olevel(&["growth", "--value", "3", "--degree", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn betti_methods_agree() {
    let seq = "1,3,6,10,15,21,18,17,17";
    let ek = olevel(&["--json", "betti", "--seq", seq, "--method", "ek"]);
    let oracle = olevel(&["--json", "betti", "--seq", seq, "--method", "oracle"]);
    assert_eq!(stdout(&ek), stdout(&oracle));
    let entries = json_lines(&ek)[0]["entries"].as_array().unwrap().clone();
    let has = |q: u64, shift: u64, mult: u64| {
        entries
            .iter()
            .any(|e| e["q"] == q && e["shift"] == shift && e["mult"] == mult)
    };
    assert!(has(1, 9, 4) && has(2, 9, 3));

    let closed = olevel(&["--json", "betti", "--seq", seq, "--method", "closed"]);
    let v = &json_lines(&closed)[0];
    assert_eq!(
        (v["beta1"].as_u64(), v["beta2"].as_u64()),
        (Some(4), Some(3))
    );

    let o = olevel(&["betti", "--seq", "1,3,6,10", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn typevector_both_directions() {
    let o = olevel(&["typevector", "--seq", "1,3,6,8,9,9,9,10"]);
    assert!(stdout(&o).starts_with("((2),(1,3,6,7),(1,2,3,4,5,6,7,8))"));
    let o = olevel(&[
        "typevector",
        "--tv",
        "((2),(1,3,6,7),(1,2,3,4,5,6,7,8))",
        "--to-hf",
    ]);
    assert_eq!(stdout(&o).trim(), "1,3,6,8,9,9,9,10");
    let o = olevel(&["typevector", "--tv", "((1,4),(1,2,3,4))"]);
    assert_eq!(o.status.code(), Some(2));
    let o = olevel(&["typevector", "--tv", "((1,4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn socle_and_lex_ideal() {
    let o = olevel(&["socle", "--seq", "1,3,2,2"]);
    let s = stdout(&o);
    assert!(s.contains("1: x1"));
    assert!(s.contains("3: x2*x3^2 x3^3"));
    let o = olevel(&["lex-ideal", "--seq", "1,3,2,2", "--gens-only"]);
    assert_eq!(stdout(&o), "2: x1^2 x1*x2 x1*x3 x2^2\n4: x2*x3^3 x3^4\n");
}

#[test]
fn enumerate_is_independent_of_jobs() {
    let base = [
        "--json",
        "enumerate",
        "--codim",
        "3",
        "--max-socle-degree",
        "4",
        "--max-value",
        "6",
    ];
    let one = olevel(&[&base[..], &["--jobs", "1"]].concat());
    let two = olevel(&[&base[..], &["--jobs", "2"]].concat());
    assert_eq!(o_ok(&one), o_ok(&two));
    let lines = json_lines(&one);
    let census = &lines.last().unwrap()["census"];
    assert_eq!(census["total"].as_u64().unwrap() as usize, lines.len() - 1);
}

fn o_ok(o: &Output) -> String {
    assert_eq!(o.status.code(), Some(0));
    stdout(o)
}
