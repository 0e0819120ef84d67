use serde_json::{json, Value};

use uinorm_core::io::{parse_norm, parse_operator};
use uinorm_core::isomaps::{IsometryForm, Phi};
use uinorm_core::suites::{run_suite, RunConfig, Suite};
use uinorm_core::uinorm::{norm_f, verify_radius_sandwich, RADIUS_TOL};
use uinorm_core::{sample, SymmetricNorm, TailOperator, Verdict};

#[test]
fn operator_and_norm_files_evaluate() {
    let a =
        parse_operator(r#"{"m":2,"F":[[[0.4,0],[0,0]],[[0,0],[0.4,0]]],"tau":[0.2,0]}"#).unwrap();
    let f = parse_norm(r#"{"n":3,"family":"maxc","S":[[2.5,0,0],[1,1,1]]}"#).unwrap();
    assert!((norm_f(&a, &f) - 1.0).abs() < 1e-12);

    let linf = parse_norm(r#"{"n":2,"family":"lp","p":"inf"}"#).unwrap();
    assert_eq!(linf, SymmetricNorm::lp(2, f64::INFINITY).unwrap());
    assert_eq!(serde_json::to_value(&linf).unwrap()["p"], "inf");
}

#[test]
fn malformed_inputs_are_rejected() {
    for text in [
        r#"{"m":2,"F":[[[1,0]]],"tau":[0,0]}"#,
        r#"{"m":1,"F":[[[1,0]]],"tau":[0,0],"extra":1}"#,
        r#"{"m":1,"F":[[[1,0]]]}"#,
        "not json",
    ] {
        assert!(parse_operator(text).is_err(), "{text}");
    }
    for text in [
        r#"{"n":3,"family":"kyfan"}"#,
        r#"{"n":2,"family":"cnorm","c":[1,2]}"#,
        r#"{"n":2,"family":"lp","p":0.5}"#,
        r#"{"n":2,"family":"nope"}"#,
    ] {
        assert!(parse_norm(text).is_err(), "{text}");
    }
}

#[test]
fn operator_json_round_trips() {
    let mut rng = sample::rng_for(3, 0);
    for _ in 0..20 {
        let a = sample::random_operator(&mut rng, 6);
        let text = serde_json::to_string(&a).unwrap();
        let b: TailOperator = serde_json::from_str(&text).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn isometry_form_json_shape() {
    let mut rng = sample::rng_for(4, 0);
    let l = IsometryForm::random(&mut rng, 2, Phi::AdjointTranspose);
    let v = serde_json::to_value(&l).unwrap();
    assert_eq!(v["phi"], "adjt");
    for key in ["U", "V", "R0"] {
        assert!(v[key].is_object(), "{key}");
    }
    let back: IsometryForm = serde_json::from_value(v).unwrap();
    assert_eq!(back.phi(), Phi::AdjointTranspose);

    let mut bad = serde_json::to_value(&l).unwrap();
    bad["U"] = json!({"m":1,"F":[[[2,0]]],"tau":[1,0]});
    assert!(serde_json::from_value::<IsometryForm>(bad).is_err());
}

#[test]
fn certificate_json_shape() {
    let f = SymmetricNorm::ky_fan(2, 2).unwrap();
    let a = parse_operator(r#"{"m":2,"F":[[[0,0],[2,0]],[[0,0],[0,0]]],"tau":[0,0]}"#).unwrap();
    let cert = verify_radius_sandwich(&a, &f, RADIUS_TOL);
    assert_eq!(cert.verdict, Verdict::Equality);
    let v = serde_json::to_value(&cert).unwrap();
    assert_eq!(v["relation"], "le");
    assert_eq!(v["verdict"], "equality");
    for key in ["statement", "lhs", "rhs", "tol", "witness"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn suite_report_shape() {
    let cfg = RunConfig {
        seed: 9,
        samples: Some(10),
        ..RunConfig::default()
    };
    let report = run_suite(Suite::Uniform, &cfg).unwrap();
    let v: Value = serde_json::to_value(&report).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in [
        "suite",
        "version",
        "seed",
        "tolerance",
        "samples",
        "passed",
        "certificates",
    ] {
        assert!(keys.contains(&key), "{key}");
    }
    assert_eq!(v["suite"], "uniform");
    assert_eq!(v["seed"], 9);
    assert_eq!(v["passed"], true);
}
