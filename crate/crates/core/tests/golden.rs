use std::process::Command;

use gdslab::cli::run;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("gdslab").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn check(args: &[&str], golden: &str, code: i32) {
    let (c1, first) = call(args);
    let (c2, second) = call(args);
    assert_eq!((c1, c2), (code, code), "{args:?}");
    assert_eq!(first, second, "{args:?} is not byte-stable");
    assert_eq!(first, golden, "{args:?} drifted from its golden file");
}

#[test]
fn functors_nine_three() {
    check(
        &["functors", "--divisors", "9,3", "--json"],
        include_str!("golden/functors_9_3.json"),
        0,
    );
}

#[test]
fn verify_all_nine_three() {
    // r2f_gens fails on (9,3), so the run exits 1
    check(
        &["verify", "--theorem", "all", "--divisors", "9,3", "--json"],
        include_str!("golden/verify_all_9_3.json"),
        1,
    );
}

#[test]
fn sweep_two_three() {
    check(
        &["sweep", "--pool", "2,3", "--max-rank", "2", "--json"],
        include_str!("golden/sweep_2_3_rank2.json"),
        0,
    );
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let digits = |s: &str| -> Vec<String> {
        let mut v: Vec<String> = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        v.sort();
        v
    };
    for args in [
        vec!["functors", "--divisors", "9,3"],
        vec!["dimsub", "--divisors", "9,3", "--ideal", "f*r*f", "--level", "4", "--mod", "RRF.g4"],
    ] {
        let (_, text) = call(&args);
        let mut j = args.clone();
        j.push("--json");
        let (_, json) = call(&j);
        assert_eq!(digits(&text), digits(&json), "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gdslab");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["functors", "--divisors", "9,3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), include_str!("golden/functors_9_3.json"));
    let o = status(&["functors", "--divisors", "3,9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("divisor chain violated"));
    let o = status(&["dimsub", "--divisors", "9,3", "--ideal", "r*r*f", "--level", "4", "--mod", "RF.g4"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(bin)
        .args(["sweep", "--pool", "2", "--max-rank", "4"])
        .env("GDSLAB_MAX_RANK", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn published_schema_matches_version() {
    let schema: serde_json::Value = serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    assert_eq!(
        schema["properties"]["schema_version"]["const"],
        gdslab::cli::report::SCHEMA_VERSION
    );
}
