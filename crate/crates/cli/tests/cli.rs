use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_single_identity() {
    let o = run(&["verify", "--id", "R1", "--tol", "1e-10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["id"], "R1");
    assert_eq!(v["pass"], true);
    assert!(v["anchor"].as_str().unwrap().contains("(qot1)"));
    assert_eq!(v["tol"].as_f64(), Some(1e-10));
}

#[test]
fn eval_dilogarithm_at_one() {
    let o = run(&["eval", "li2", "1", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    let expect = std::f64::consts::PI.powi(2) / 6.0;
    assert!((v - expect).abs() <= 2e-16, "{v}");
}

#[test]
fn eval_other_functions() {
    for (args, expect) in [
        (
            vec!["eval", "zeta", "2"],
            std::f64::consts::PI.powi(2) / 6.0,
        ),
        (vec!["eval", "digamma", "1"], -0.577_215_664_901_532_9),
        (
            vec!["eval", "hurwitz", "2", "1"],
            std::f64::consts::PI.powi(2) / 6.0,
        ),
        (
            vec!["eval", "polygamma", "1", "1"],
            std::f64::consts::PI.powi(2) / 6.0,
        ),
        (
            vec!["eval", "li4", "-1"],
            -7.0 * std::f64::consts::PI.powi(4) / 720.0,
        ),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: f64 = stdout(&o)
            .split_whitespace()
            .next()
            .unwrap()
            .parse()
            .unwrap();
        assert!((v - expect).abs() < 1e-14, "{args:?}: {v}");
    }
}

#[test]
fn domain_errors_exit_three() {
    let o = run(&[
        "verify", "--id", "T1a", "--tol", "1e-9", "--", "--sample", "a=-2",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("(−∞, −1)"), "{err}");
    assert!(err.contains("a = -2"), "{err}");

    let o = run(&["eval", "li3", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--id", "NOPE"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--tol", "1e-2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--tol", "1e-14"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--parallelism", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["eval", "gamma", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "li2", "x"]).status.code(), Some(2));
}

#[test]
fn sample_override_in_domain() {
    let o = run(&["verify", "--id", "J2", "--", "--sample", "a=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn reports_are_deterministic_and_consistent() {
    let dir = std::env::temp_dir();
    let a = dir.join(format!("pv-{}-a.jsonl", std::process::id()));
    let b = dir.join(format!("pv-{}-b.jsonl", std::process::id()));
    let base = ["verify", "--id", "[ST]*", "--samples", "9", "--seed", "3"];
    let mut args1 = base.to_vec();
    args1.extend(["--parallelism", "1", "--jsonl", a.to_str().unwrap()]);
    let mut args8 = base.to_vec();
    args8.extend([
        "--parallelism",
        "8",
        "--jsonl",
        b.to_str().unwrap(),
        "--table",
    ]);
    assert_eq!(run(&args1).status.code(), Some(0));
    let o8 = run(&args8);
    assert_eq!(o8.status.code(), Some(0));
    let ja = std::fs::read(&a).unwrap();
    let jb = std::fs::read(&b).unwrap();
    assert_eq!(ja, jb);

    let text = String::from_utf8(ja).unwrap();
    let table = stdout(&o8);
    let rows: Vec<&str> = table.lines().skip(1).collect();
    let records: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), records.len());
    for (row, rec) in rows.iter().zip(&records) {
        assert!(row.starts_with(rec["id"].as_str().unwrap()));
        // the table rounds the same number to 12 digits
        let lhs = rec["lhs"][0].as_f64().unwrap();
        assert!(row.contains(&format!("{lhs:.11e}")), "{row}");
    }
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn list_prints_catalog() {
    let o = run(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().count() >= 45);
    assert!(out
        .lines()
        .any(|l| l.starts_with("R1") && l.contains("(qot1)")));
}
