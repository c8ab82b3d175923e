mod common;

use std::path::Path;
use std::process::Command;

use common::*;
use num_bigint::BigInt;
use pertinax::frontend::ast::{Expr, Span, Stmt, TaskKind};
use pertinax::frontend::{check_source, parse, parse_expr, run_source, FrontendError, RunOptions, SCHEMA_VERSION};
use proptest::prelude::*;
use serde_json::Value;

fn run(src: &str) -> pertinax::frontend::Report {
    run_source(src, &RunOptions::default()).unwrap()
}

#[test]
fn statements_parse_into_the_expected_shape() {
    let s = parse(&fixture("skew_space_order3.pax")).unwrap();
    let kinds: Vec<&str> = s
        .stmts
        .iter()
        .map(|st| match st {
            Stmt::Field { .. } => "field",
            Stmt::Algebra { .. } => "algebra",
            Stmt::Group { .. } => "group",
            Stmt::Pair { .. } => "pair",
            Stmt::Element { .. } => "element",
            Stmt::Task(_) => "task",
        })
        .collect();
    assert_eq!(kinds[0], "field");
    assert!(kinds.contains(&"pair"));
    assert!(s.tasks().any(|t| t.kind == TaskKind::Semisimple));
}

#[test]
fn every_fixture_round_trips_through_display() {
    for n in fixture_names() {
        let a = parse(&fixture(&n)).unwrap();
        let b = parse(&a.to_string()).unwrap_or_else(|e| panic!("{n}: {e}\n{a}"));
        assert_eq!(a, b, "{n}");
    }
}

#[test]
fn every_fixture_passes_check() {
    for n in fixture_names() {
        check_source(&fixture(&n)).unwrap_or_else(|e| panic!("{n}: {e}"));
    }
}

#[test]
fn root_outside_conductor_is_rejected_with_position() {
    let src = "field cyclotomic(2);\nalgebra R = commutative(2);\nelement e = z3*x;\n";
    let e = check_source(src).unwrap_err();
    assert!(matches!(e, FrontendError::Math { .. }), "{e:?}");
    assert_eq!((e.span().line, e.span().col), (3, 13));
    assert!(e.to_string().contains("conductor"));
}

#[test]
fn undeclared_names_are_reported_where_they_occur() {
    let e = check_source("algebra R = commutative(2);\ntask hilbert(S);").unwrap_err();
    match e {
        FrontendError::Undeclared { span, name } => {
            assert_eq!(name, "S");
            assert_eq!((span.line, span.col), (2, 14));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn syntax_errors_carry_positions() {
    let e = check_source("algebra R = commutative(2)\ntask hilbert(R);").unwrap_err();
    assert!(matches!(e, FrontendError::Syntax { .. }));
    assert_eq!(e.span().line, 2);
}

#[test]
fn invalid_inputs_are_rejected_before_running() {
    for src in [
        "algebra R = commutative(2);\ngroup G = matrices { g: diag(1); };\ntask radical(R, G);",
        "algebra R = commutative(2);\ntask hilbert(R) maxdeg=99;",
        "algebra R = commutative(2);\nalgebra R = commutative(3);",
        "algebra R = commutative(2);\ntask hilbert(R) window=3;",
        "algebra R = commutative(2);\nfield cyclotomic(3);",
    ] {
        assert!(check_source(src).is_err(), "{src}");
    }
}

#[test]
fn empty_script_gives_empty_report() {
    let r = run("# nothing here\n");
    assert!(r.tasks.is_empty());
    assert_eq!(r.exit_code(), 0);
    let v = r.to_json(false);
    assert_eq!(v["schema"], SCHEMA_VERSION);
    assert_eq!(v["tasks"], Value::Array(vec![]));
}

#[test]
fn failing_task_does_not_stop_later_tasks() {
    let src = "algebra R = commutative(2);\ngroup G = matrices { s: perm(2, 1); };\npair B = ([x], [y]);\n\
               task verify(R, G, B) maxdeg=4;\ntask hilbert(R) maxdeg=3;";
    let r = run(src);
    assert_eq!(r.exit_code(), 2);
    let err = r.tasks[0].outcome.as_ref().unwrap_err();
    assert_eq!(err.kind, "NotPertinent");
    assert_eq!(r.result(1).unwrap()["hilbert_R"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn cli_maxdeg_is_a_default_and_task_maxdeg_wins() {
    let src = "algebra R = commutative(2);\ntask hilbert(R);\ntask hilbert(R) maxdeg=2;";
    let r = run_source(src, &RunOptions { maxdeg: Some(5), seed: 0 }).unwrap();
    assert_eq!(r.result(0).unwrap()["hilbert_R"].as_array().unwrap().len(), 6);
    assert_eq!(r.result(1).unwrap()["hilbert_R"].as_array().unwrap().len(), 3);
}

#[test]
fn timing_is_optional_in_json() {
    let r = run("algebra R = commutative(2);\ntask hilbert(R) maxdeg=2;");
    assert!(r.to_json(true)["tasks"][0].get("timing_ms").is_some());
    assert!(r.to_json(false)["tasks"][0].get("timing_ms").is_none());
}

/// Golden reports for every fixture; regenerate with `UPDATE_GOLDEN=1`.
#[test]
fn fixture_reports_match_golden_files() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    if update {
        std::fs::create_dir_all(&dir).unwrap();
    }
    for n in fixture_names() {
        let got = run(&fixture(&n)).to_json_string(false);
        let path = dir.join(n.replace(".pax", ".json"));
        if update {
            std::fs::write(&path, &got).unwrap();
        } else {
            let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
            assert_eq!(got, want, "{n} differs from golden");
        }
    }
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_pertinax")).args(args).output().unwrap()
}

#[test]
fn cli_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = dir.path().join("ok.pax");
    std::fs::write(&ok, "algebra R = commutative(2);\ntask hilbert(R) maxdeg=3;\n").unwrap();
    let bad = dir.path().join("bad.pax");
    std::fs::write(&bad, "algebra R = ;\n").unwrap();
    let fail = fixtures_dir().join("nonpertinent.pax");
    let (ok, bad, fail) = (ok.to_str().unwrap(), bad.to_str().unwrap(), fail.to_str().unwrap());

    let out = cli(&["run", ok]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tasks"][0]["result"]["hilbert_R"], serde_json::json!([1, 2, 3, 4]));

    assert_eq!(cli(&["check", ok]).status.code(), Some(0));
    let out = cli(&["check", bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.pax:1:"));
    assert_eq!(cli(&["run", bad]).status.code(), Some(1));
    assert_eq!(cli(&["run", fail, "--text"]).status.code(), Some(2));
    assert_eq!(cli(&["run", "/nonexistent.pax"]).status.code(), Some(1));
    assert_eq!(cli(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn cli_writes_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let fx = fixtures_dir().join("swap_plane.pax");
    let st = cli(&["run", fx.to_str().unwrap(), "--json", out.to_str().unwrap(), "--threads", "2"]);
    assert_eq!(st.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["tasks"][0]["status"], "ok");
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..50).prop_map(|n| Expr::Int(BigInt::from(n))),
        prop_oneof![Just("x"), Just("y"), Just("z3"), Just("t")].prop_map(|s| Expr::Ident(s.into(), Span::default())),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
        ]
    })
}

proptest! {
    #[test]
    fn expressions_round_trip(e in arb_expr()) {
        let back = parse_expr(&e.to_string()).unwrap();
        prop_assert_eq!(back, e);
    }
}
