use std::process::{Command, Output};

use ellcomb::BivarPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellcomb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn prints_n2() {
    let out = run(&["poly", "nk", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "-1*v^2 + 2*q*v + 2*v");
    let out = run(&["poly", "nk", "2", "--var", "N1"]);
    assert_eq!(stdout(&out).trim(), "-1*N1^2 + 2*q*N1 + 2*N1");
}

#[test]
fn json_round_trips() {
    let cases: &[&[&str]] = &[
        &["nk", "5"],
        &["hk", "4"],
        &["ek", "5"],
        &["pik", "2", "6"],
        &["lucas", "8"],
        &["lucas-twisted", "7"],
        &["fib", "7"],
        &["fib-twisted", "6"],
        &["wheel", "5"],
        &["cyc", "12"],
        &["ecyc", "12"],
        &["wcyc", "6"],
        &["qid", "2", "15"],
        &["cheb", "6"],
    ];
    for case in cases {
        let mut args = vec!["poly"];
        args.extend_from_slice(case);
        let text = stdout(&run(&args));
        args.extend_from_slice(&["--format", "json"]);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{case:?}");
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(doc["family"], case[0]);
        let poly = serde_json::from_value::<BivarPoly>(doc["terms"].clone()).unwrap();
        assert!(!poly.is_zero(), "{case:?}");
        if !matches!(case[0], "pik" | "qid" | "cyc" | "cheb") {
            assert_eq!(BivarPoly::parse(text.trim()).unwrap(), poly, "{case:?}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a = run(&["table", "pik", "--k", "8"]);
    let b = run(&["table", "pik", "--k", "8"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 8);
    assert!(text.starts_with("P_{1,8} = "));
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "all", "--max-k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn oracle_matches() {
    let out = run(&["oracle", "check", "--curve", "5,1,1", "--max-k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("N1=9 predicted=9 MATCH"));
    assert_eq!(text.matches("MATCH").count(), 3);
    let out = run(&["oracle", "kernel", "--curve", "5,1,1", "--max-d", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["poly", "nk", "0"][..],
        &["poly", "pik", "3"],
        &["poly", "bogus", "3"],
        &["verify", "nonsense"],
        &["oracle", "check", "--curve", "4,1,1"],
        &["oracle", "check", "--curve", "5,0,0"],
        &["table", "nk", "--k", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
