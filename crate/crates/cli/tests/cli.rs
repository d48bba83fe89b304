use std::process::{Command, Output};

use serde_json::Value;

fn asm3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asm3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = asm3(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_owned).collect())
        .collect()
}

fn json_rows(text: &str, keys: &[&str]) -> Vec<Vec<String>> {
    let v: Value = serde_json::from_str(text).unwrap();
    v.as_array()
        .expect("top-level array")
        .iter()
        .map(|rec| {
            keys.iter()
                .map(|k| match &rec[*k] {
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.to_string(),
                    other => panic!("unexpected {other}"),
                })
                .collect()
        })
        .collect()
}

#[test]
fn table_order_four() {
    let text = stdout(&["table", "--n-max", "4"]);
    assert!(text.starts_with("n,r,count\n"));
    assert!(text.ends_with("4,1,9\n4,2,36\n4,3,36\n4,4,9\n"));
    assert_eq!(csv_rows(&text).len(), 10);
}

#[test]
fn table_single_json_record() {
    let text = stdout(&["table", "--n-max", "1", "--format", "json"]);
    assert_eq!(
        json_rows(&text, &["n", "r", "count"]),
        vec![vec!["1", "1", "1"]]
    );
}

#[test]
fn table_other_weight_uses_oracle() {
    let text = stdout(&["table", "--n-max", "3", "--x", "1"]);
    assert!(text.ends_with("3,1,2\n3,2,3\n3,3,2\n"));
}

#[test]
fn table_past_oracle_limit_fails() {
    let out = asm3(&["table", "--n-max", "20", "--x", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn genfun_rows() {
    assert_eq!(
        stdout(&["genfun", "--n", "3"]),
        "degree,coeff\n0,2\n1,5\n2,2\n"
    );
    assert_eq!(
        stdout(&["genfun", "--n", "2", "--normalized"]),
        "degree,coeff\n0,1/2\n1,1/2\n"
    );
    assert_eq!(stdout(&["genfun", "--n", "1"]), "degree,coeff\n0,1\n");
}

#[test]
fn f_poly_methods_agree() {
    let closed = stdout(&["f-poly", "--n", "2", "--method", "closed"]);
    assert_eq!(closed, "degree,coeff\n2,2\n4,-1\n");
    assert_eq!(
        stdout(&["f-poly", "--n", "2", "--method", "linear"]),
        closed
    );
    assert_eq!(
        stdout(&["f-poly", "--n", "3"]),
        "degree,coeff\n1,1\n5,-2/3\n7,1/3\n"
    );
    for n in ["4", "5", "6"] {
        assert_eq!(
            stdout(&["f-poly", "--n", n, "--method", "linear"]),
            stdout(&["f-poly", "--n", n, "--method", "closed"]),
            "n={n}"
        );
    }
}

#[test]
fn totals_listing() {
    let text = stdout(&["totals", "--n-max", "6"]);
    let totals: Vec<String> = csv_rows(&text).into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(totals, ["1", "2", "9", "90", "2025", "102060"]);
}

#[test]
fn oracle_modes() {
    let brute = stdout(&["oracle", "--n", "5", "--mode", "bruteforce"]);
    assert_eq!(brute, stdout(&["oracle", "--n", "5", "--mode", "dp"]));
    let formula: Vec<_> = csv_rows(&stdout(&["table", "--n-max", "5"]))
        .into_iter()
        .filter(|r| r[0] == "5")
        .collect();
    assert_eq!(csv_rows(&brute), formula);
    let out = asm3(&["oracle", "--n", "8", "--mode", "bruteforce"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_ratio_identity_has_51_cases() {
    let text = stdout(&["verify", "ratio-identity", "--nu-max", "50"]);
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 51);
    assert!(rows.iter().all(|r| r[2] == "pass"));
}

#[test]
fn verify_oracle_and_smoke_run() {
    stdout(&["verify", "oracle", "--n-max", "6"]);
    let text = stdout(&[
        "verify", "all", "--nu-max", "2", "--n-max", "4", "--format", "json",
    ]);
    let rows = json_rows(&text, &["suite", "case", "status"]);
    assert!(rows.iter().all(|r| r[2] == "pass"));
    for suite in [
        "oracle",
        "recurrence",
        "genfun",
        "kernel",
        "special-points",
        "ratio-identity",
    ] {
        assert!(rows.iter().any(|r| r[0] == suite), "{suite} missing");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(asm3(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(asm3(&["genfun", "--n", "0"]).status.code(), Some(2));
    assert_eq!(
        asm3(&["table", "--n-max", "3", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(asm3(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn csv_and_json_agree() {
    let cases: [(&[&str], &[&str]); 4] = [
        (&["table", "--n-max", "7"], &["n", "r", "count"]),
        (
            &["genfun", "--n", "6", "--normalized"],
            &["degree", "coeff"],
        ),
        (&["f-poly", "--n", "5"], &["degree", "coeff"]),
        (&["totals", "--n-max", "30"], &["n", "total"]),
    ];
    for (args, keys) in cases {
        let csv = csv_rows(&stdout(args));
        let mut json_args = args.to_vec();
        json_args.extend(["--format", "json"]);
        assert_eq!(json_rows(&stdout(&json_args), keys), csv, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--n-max", "9"][..],
        &["verify", "all", "--nu-max", "3", "--n-max", "5"][..],
        &["oracle", "--n", "6", "--x", "2"][..],
    ] {
        assert_eq!(asm3(args).stdout, asm3(args).stdout, "{args:?}");
    }
}
