//! End-to-end tests of the binary: exit codes, format stability, and the
//! documented subcommand surface, run against the shipped fixture files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"));
    path.to_string_lossy().into_owned()
}

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

#[test]
fn equal_and_divides_exit_codes() {
    let b3 = fixture("b3");
    assert_eq!(
        code(&artin(&["-m", &b3, "equal", "s1.s2.s1", "s2.s1.s2"])),
        0
    );
    assert_eq!(code(&artin(&["-m", &b3, "equal", "s1", "s2"])), 1);
    assert_eq!(code(&artin(&["-m", &b3, "divides", "s1", "s2.s1.s2"])), 0);
    assert_eq!(code(&artin(&["-m", &b3, "divides", "s1", "s2.s1"])), 1);
    // the empty word is the identity and divides everything
    assert_eq!(code(&artin(&["-m", &b3, "divides", "", "s2.s1"])), 0);
}

#[test]
fn lcm_outputs() {
    let b3 = fixture("b3");
    let out = artin(&["-m", &b3, "lcm", "s1", "s2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("lcm = s1.s2.s1"));

    // no common multiple is a conclusive answer, exit 0
    let free = fixture("free2");
    let out = artin(&["-m", &free, "lcm", "a1", "a2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("no common right multiple"));
}

#[test]
fn input_errors_exit_3() {
    let out = artin(&["-m", "/nonexistent.json", "clique-poly"]);
    assert_eq!(code(&out), 3);
    let b3 = fixture("b3");
    let out = artin(&["-m", &b3, "equal", "s1.zz", "s1"]);
    assert_eq!(code(&out), 3);
    let out = artin(&["-m", &b3, "kms", "eval", "--j", "s1"]);
    assert_eq!(code(&out), 3); // neither --t nor --beta
}

#[test]
fn clique_polynomial_reports() {
    let b4 = fixture("b4");
    let out = artin(&["-m", &b4, "clique-poly", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["clique_polynomial"]["coefficients"],
        serde_json::json!([1, -3, 1, 2, 0, 0, -1])
    );
}

#[test]
fn json_output_is_byte_identical() {
    let b4 = fixture("b4");
    let first = artin(&["-m", &b4, "kms", "temps", "--format", "json"]);
    let second = artin(&["-m", &b4, "kms", "temps", "--format", "json"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn kms_surface() {
    let b3 = fixture("b3");
    let gaps = artin(&["-m", &b3, "kms", "gaps"]);
    assert_eq!(code(&gaps), 0);
    assert!(stdout(&gaps).contains("has gap: true"));

    let eval = artin(&["-m", &b3, "kms", "eval", "--t", "0.8", "--j", "s1,s2"]);
    assert_eq!(code(&eval), 1); // negative verdict at t = 0.8
    assert!(stdout(&eval).contains("-11/125"));

    let critical = artin(&["-m", &b3, "kms", "critical"]);
    assert_eq!(code(&critical), 0);
    assert!(stdout(&critical).contains("0.481211825"));

    // no reduction guarantee without --force, exit 3; forced computation runs
    let a2t = fixture("a2tilde");
    assert_eq!(code(&artin(&["-m", &a2t, "kms", "temps"])), 3);
    assert_eq!(code(&artin(&["-m", &a2t, "kms", "temps", "--force"])), 0);

    let grid = artin(&[
        "-m",
        &b3,
        "kms",
        "temps",
        "--sample-grid",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&grid), 0);
    let text = stdout(&grid);
    assert!(text.lines().count() == 5);
    assert!(text.starts_with("t,beta,"));
}

#[test]
fn tree_and_zpoly() {
    let b3 = fixture("b3");
    let tree = artin(&["-m", &b3, "tree", "--list", "s1.s2,s1"]);
    assert_eq!(code(&tree), 0);
    assert!(stdout(&tree).contains("finite: 3 nodes"));

    // a cap too small for the expansion is inconclusive, exit 2
    let b4 = fixture("b4");
    let capped = artin(&[
        "-m",
        &b4,
        "tree",
        "--list",
        "s1.s2.s3,s2.s1",
        "--max-depth",
        "1",
    ]);
    assert_eq!(code(&capped), 2);

    let z = artin(&["-m", &b3, "zpoly", "--list", "s1,s2", "--format", "json"]);
    assert_eq!(code(&z), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&z)).unwrap();
    assert_eq!(
        v["z_polynomial"]["coefficients"],
        serde_json::json!([1, -2, 0, 1])
    );
}

#[test]
fn sets_surface() {
    let b3 = fixture("b3");
    let rewrite = artin(&[
        "-m", &b3, "sets", "rewrite", "--k", "s1.s2.s1", "--target", "atoms",
    ]);
    assert_eq!(code(&rewrite), 0);
    let text = stdout(&rewrite);
    assert!(text.contains("3 cells"), "{text}");

    let check = artin(&[
        "-m",
        &b3,
        "sets",
        "check-algebra",
        "--samples",
        "8",
        "--ball",
        "4",
    ]);
    assert_eq!(code(&check), 0);
    assert!(stdout(&check).contains("8 ok"));
}

#[test]
fn ball_and_verify() {
    let b3 = fixture("b3");
    let ball = artin(&["-m", &b3, "ball", "3", "--format", "csv"]);
    assert_eq!(code(&ball), 0);
    let text = stdout(&ball);
    assert_eq!(text.lines().count(), 1 + 1 + 2 + 4 + 7);
    assert!(text.lines().nth(1).unwrap().starts_with("0,"));

    let verify = artin(&["-m", &b3, "verify", "--ball", "4"]);
    assert_eq!(code(&verify), 0);
    assert!(stdout(&verify).contains("verdict: ok"));
}

#[test]
fn selftest_runs_without_monoid() {
    let out = artin(&["selftest"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn pinf_and_cliques() {
    let b3 = fixture("b3");
    let p = artin(&["-m", &b3, "pinf", "--format", "json"]);
    assert_eq!(code(&p), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&p)).unwrap();
    assert_eq!(v["size"], 4);
    assert_eq!(v["saturated"], true);

    let b4 = fixture("b4");
    let c = artin(&["-m", &b4, "cliques", "--format", "json"]);
    assert_eq!(code(&c), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert_eq!(v["count"], 8);
}
