//! End-to-end tests of the brickwork binary: golden outputs, the
//! exit-code contract, format resolution layers, determinism across
//! runs and thread counts, and schema validation of every JSON shape.

use std::io::Write;
use std::process::{Command, Output};

use brickwork::schema::{output_schema, validate};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_brickwork"));
    // Tests must not inherit a format from the developer's shell.
    c.env_remove("BRICKWORK_FORMAT");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn golden_outputs_are_byte_stable() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["tilings", "--shape", "2,2,1", "--perm", "(3,1)(4)(5,2)"],
            include_str!("golden/tilings_table1.txt"),
        ),
        (
            &["classfn", "--shape", "1,1,2", "--eta-basis"],
            include_str!("golden/classfn_eta_basis.txt"),
        ),
        (
            &["character", "--n", "4", "--format", "csv"],
            include_str!("golden/character_s4.csv"),
        ),
        (&["kostka", "--n", "3"], include_str!("golden/kostka_s3.txt")),
        (
            &["homology", "--perm", "(3,1)(4)(5,2)", "--j", "5"],
            include_str!("golden/homology_fig2.txt"),
        ),
        (
            &["homology", "--perm", "(3,1)(4)(5,2)", "--j", "5", "--poset", "dot"],
            include_str!("golden/poset_fig2.dot"),
        ),
        (&["charpoly", "--k", "3"], include_str!("golden/charpoly_row3.txt")),
        (
            &["charpoly", "--k", "3", "--family", "hook"],
            include_str!("golden/charpoly_hook3.txt"),
        ),
        (&["rosas", "--max-k", "1"], include_str!("golden/rosas_k1.txt")),
        (
            &["kronecker", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1", "--format", "json"],
            include_str!("golden/kronecker.json"),
        ),
    ];
    for (args, expected) in cases {
        assert_eq!(&stdout_of(args), expected, "golden mismatch for {args:?}");
    }
}

#[test]
fn identical_runs_produce_identical_bytes() {
    let args = ["verify", "alternating", "--max-n", "4", "--format", "json"];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    // Thread count must not leak into output ordering.
    let single = stdout_of(&["--jobs", "1", "verify", "doubilet", "--max-n", "5"]);
    let multi = stdout_of(&["--jobs", "4", "verify", "doubilet", "--max-n", "5"]);
    assert_eq!(single, multi);
}

#[test]
fn every_json_shape_validates_against_the_shipped_schema() {
    let schema = output_schema();
    let commands: &[&[&str]] = &[
        &["tilings", "--shape", "2,2,1", "--perm", "(3,1)(4)(5,2)"],
        &["classfn", "--shape", "2,2"],
        &["classfn", "--shape", "1,1,2", "--eta-basis"],
        &["character", "--n", "4"],
        &["kostka", "--n", "4"],
        &["doubilet", "--lambda", "2,2,1"],
        &["doubilet", "--lambda", "2,2,1", "--shapes"],
        &["charpoly", "--k", "3"],
        &["charpoly", "--k", "2", "--family", "hook", "--monomial"],
        &["charpoly", "--k", "2", "--eval-n", "6"],
        &["charpoly", "--gamma", "--max-degree", "4"],
        &["homology", "--perm", "(3,1)(4)(5,2)", "--j", "5"],
        &["homology", "--perm", "(3,1)(4)(5,2)", "--j", "5", "--poset", "json"],
        &["kronecker", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1"],
        &["rosas", "--max-k", "1"],
        &["verify", "permutohedron", "--max-n", "5"],
        &["table", "character", "--n", "3"],
        &["table", "reduced-kronecker", "--max-k", "1"],
    ];
    for args in commands {
        let mut with_format = args.to_vec();
        with_format.extend(["--format", "json"]);
        let text = stdout_of(&with_format);
        let value: Value =
            serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: bad json: {e}"));
        validate(&schema, &value).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn homology_json_carries_the_report_fields() {
    let text = stdout_of(&[
        "homology", "--perm", "(3,1)(4)(5,2)", "--j", "5", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["kind"], "homology");
    assert_eq!(v["dims"], serde_json::json!([0, 0, 1, 0, 0]));
    assert_eq!(v["euler"], -1);
    assert_eq!(v["lhs"], -1);
    assert_eq!(v["rhs"], -1);
}

#[test]
fn parse_errors_exit_2_with_empty_stdout() {
    let out = run(&["tilings", "--shape", "2,2,1", "--perm", "(3,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));

    let out = run(&["verify", "everything"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));

    let out = run(&["character", "--n", "19"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", "alternating", "--max-n", "13"]);
    assert_eq!(out.status.code(), Some(2));

    // Usage errors from argument parsing share the same code.
    let out = run(&["tilings", "--shape", "2,2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn overweight_shape_is_not_an_error() {
    let out = run(&["tilings", "--shape", "4,3", "--perm", "(1,2)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("zeta = 0"));
}

#[test]
fn format_environment_variable_sets_the_default() {
    let out = bin()
        .args(["kostka", "--n", "3"])
        .env("BRICKWORK_FORMAT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).expect("env var selects json");
    assert_eq!(v["kind"], "table");

    // An explicit flag still wins over the environment.
    let out = bin()
        .args(["kostka", "--n", "3", "--format", "plain"])
        .env("BRICKWORK_FORMAT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("Kostka matrix"));

    let out = bin()
        .args(["kostka", "--n", "3"])
        .env("BRICKWORK_FORMAT", "yaml")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_sits_below_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("brickwork.conf");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# defaults for this checkout").unwrap();
    writeln!(f, "format = csv").unwrap();
    drop(f);
    let path_str = path.to_str().unwrap();

    let out = bin().args(["kostka", "--n", "3", "--config", path_str]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("mu,"));

    let out = bin()
        .args(["kostka", "--n", "3", "--config", path_str])
        .env("BRICKWORK_FORMAT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.starts_with(b"{"));

    let out = run(&["kostka", "--n", "3", "--config", "/nonexistent/brickwork.conf"]);
    assert_eq!(out.status.code(), Some(2));

    let bad = dir.path().join("bad.conf");
    std::fs::write(&bad, "jbos=2\n").unwrap();
    let out = run(&["kostka", "--n", "3", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass_at_reduced_sizes() {
    for (suite, extra) in [
        ("alternating", vec!["--max-n", "5"]),
        ("doubilet", vec!["--max-n", "5"]),
        ("young", vec!["--max-n", "5"]),
        ("charpoly", vec!["--max-k", "3", "--max-n", "8"]),
        ("rosas", vec!["--max-k", "2"]),
        ("permutohedron", vec!["--max-n", "8"]),
    ] {
        let mut args = vec!["verify", suite];
        args.extend(extra);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "suite {suite}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains(", 0 failed"), "suite {suite}");
    }
}

#[test]
fn poset_json_matches_figure_counts() {
    let text = stdout_of(&[
        "homology", "--perm", "(3,1)(4)(5,2)", "--j", "5", "--poset", "json",
    ]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 13);
    assert_eq!(v["edges"].as_array().unwrap().len(), 18);
    let ranks: Vec<u64> =
        v["nodes"].as_array().unwrap().iter().map(|n| n["rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks.iter().filter(|&&r| r == 2).count(), 6);
    assert_eq!(ranks.iter().filter(|&&r| r == 3).count(), 6);
    assert_eq!(ranks.iter().filter(|&&r| r == 4).count(), 1);
}
