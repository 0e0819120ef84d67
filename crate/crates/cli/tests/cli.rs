use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use uinorm_core::sample;

const EXAMPLE_A: &str = r#"{"m":2,"F":[[[0.4,0],[0,0]],[[0,0],[0.4,0]]],"tau":[0.2,0]}"#;
const EXAMPLE_NORM: &str = r#"{"n":3,"family":"maxc","S":[[2.5,0,0],[1,1,1]]}"#;
const DIAG_10: &str = r#"{"m":1,"F":[[[1,0]]],"tau":[0,0]}"#;
const KY_FAN_2: &str = r#"{"n":2,"family":"kyfan","k":2}"#;

fn uinorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uinorm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn sv_of_example_operator() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", EXAMPLE_A);
    let out = uinorm(&["sv", s(&a), "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[0.4,0.4,0.2]");
}

#[test]
fn sv_of_zero_operator() {
    let dir = TempDir::new().unwrap();
    let z = write(&dir, "z.json", r#"{"m":0,"F":[],"tau":[0,0]}"#);
    let out = uinorm(&["sv", s(&z), "--n", "4"]);
    assert_eq!(stdout(&out).trim(), "[0.0,0.0,0.0,0.0]");
}

#[test]
fn sv_matches_library_on_random_operator() {
    let dir = TempDir::new().unwrap();
    let mut rng = sample::rng_for(11, 0);
    let a = sample::random_operator_of_size(&mut rng, 4);
    let path = write(&dir, "r.json", &serde_json::to_string(&a).unwrap());
    let out = uinorm(&["sv", s(&path), "--n", "6"]);
    let expected = serde_json::to_string(&a.singular_values(6).values).unwrap();
    assert_eq!(stdout(&out).trim(), expected);
}

#[test]
fn norm_of_worked_examples() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", EXAMPLE_A);
    let f = write(&dir, "f.json", EXAMPLE_NORM);
    let d = write(&dir, "d.json", DIAG_10);
    let k = write(&dir, "k.json", KY_FAN_2);
    for (op, norm) in [(&a, &f), (&d, &k)] {
        let out = uinorm(&["norm", s(op), s(norm)]);
        assert!(out.status.success());
        let v: f64 = stdout(&out).trim().parse().unwrap();
        assert!((v - 1.0).abs() < 1e-12, "{v}");
    }
}

#[test]
fn radius_of_nilpotent() {
    let dir = TempDir::new().unwrap();
    let e = write(
        &dir,
        "e.json",
        r#"{"m":2,"F":[[[0,0],[2,0]],[[0,0],[0,0]]],"tau":[0,0]}"#,
    );
    let out = uinorm(&["radius", s(&e)]);
    let r: f64 = stdout(&out).trim().parse().unwrap();
    assert!((r - 1.0).abs() < 1e-8, "{r}");
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"m":2,"F":[[1]]"#);
    let ragged = write(&dir, "ragged.json", r#"{"m":2,"F":[[[1,0]]],"tau":[0,0]}"#);
    let a = write(&dir, "a.json", EXAMPLE_A);
    let nonsense = write(&dir, "n.json", r#"{"n":3,"family":"kyfan","k":7}"#);
    for args in [
        vec!["sv", s(&bad)],
        vec!["sv", s(&ragged)],
        vec!["sv", "/nonexistent/op.json"],
        vec!["norm", s(&a), s(&nonsense)],
        vec!["verify", "no-such-suite"],
        vec!["verify", "submult", "--family", "kyfan"],
        vec!["verify", "uniform", "--samples", "0"],
        vec!["frobnicate"],
    ] {
        let out = uinorm(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn submult_counterexample_exits_1() {
    let out = uinorm(&[
        "verify",
        "submult",
        "--family",
        "scaled_linf",
        "--gamma",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], false);
    let cert = &report["certificates"][0];
    assert_eq!(cert["verdict"], "violated");
    assert_eq!(cert["lhs"], 0.5);
    assert_eq!(cert["rhs"], 0.25);
}

#[test]
fn flat_decomposition_reproduces_worked_examples() {
    let out = uinorm(&[
        "verify",
        "flat-decomposition",
        "--paper-examples",
        "--samples",
        "20",
        "--restarts",
        "200",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let statements: Vec<&str> = report["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["statement"].as_str().unwrap())
        .collect();
    for s in [
        "example-1-flat-grid",
        "example-2-flat-grid",
        "example-1-norm-a-plus-b",
        "example-2-norm-a-plus-b",
    ] {
        assert!(statements.contains(&s), "{s}");
    }
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str, extra: &[&str]| {
        let path = dir.path().join(name);
        let mut args = vec![
            "verify",
            "trace-psd",
            "--seed",
            "5",
            "--samples",
            "300",
            "--out",
            s(&path),
        ];
        args.extend_from_slice(extra);
        let out = uinorm(&args);
        assert!(out.status.success());
        std::fs::read(&path).unwrap()
    };
    let first = run("a.json", &[]);
    assert_eq!(first, run("b.json", &[]));
    assert_eq!(first, run("c.json", &["--sequential"]));
    assert_ne!(first, {
        let path = dir.path().join("d.json");
        uinorm(&[
            "verify",
            "trace-psd",
            "--seed",
            "6",
            "--samples",
            "300",
            "--out",
            s(&path),
        ]);
        std::fs::read(&path).unwrap()
    });
}

#[test]
fn radius_sandwich_reports_beta_violations() {
    let out = uinorm(&[
        "verify",
        "radius-sandwich",
        "--seed",
        "7",
        "--samples",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    for cert in report["certificates"].as_array().unwrap() {
        let failed = cert["verdict"] == "violated";
        match cert["statement"].as_str().unwrap() {
            "radius-sharp-upper" | "radius-alpha-witness" => assert!(!failed),
            "radius-sandwich" | "radius-beta-witness" | "radius-beta-upper" => {}
            other => panic!("{other}"),
        }
    }
}

#[test]
fn corollary_takes_weights_from_c() {
    let out = uinorm(&[
        "verify",
        "cnorm-corollary",
        "--c",
        "1,0.5",
        "--samples",
        "30",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["certificates"].as_array().unwrap().len() >= 4);
}

#[test]
fn examples_table_passes() {
    let out = uinorm(&["examples", "--restarts", "100", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], true);
    assert!(report["max_delta"].as_f64().unwrap() <= 1e-9);

    let table = uinorm(&["examples", "--restarts", "100"]);
    assert!(stdout(&table).starts_with("quantity"));
}
