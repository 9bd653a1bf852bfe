use std::process::Command;

use deltashift_cli::output::{DeltaDoc, InfoDoc, OrbitsDoc, TableDoc, VerifyDoc};
use deltashift_cli::{run, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("deltashift").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn sl2_delta() {
    let (code, out, err) = call(&["delta", "--type", "A1", "--level", "3", "--weight", "1", "--coweight", "1"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(out, "[2]\n");
    assert!(err.is_empty());
}

#[test]
fn delta_with_oracle() {
    let (code, out, _) = call(&[
        "delta", "--type", "a2", "--level", "2", "--weight", "1,0", "--coweight", "1", "--oracle",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("EQUAL\n"), "{out}");
    assert!(out.contains("[1, 1]"));

    let (code, out, _) = call(&[
        "delta", "--type", "E7", "--level", "2", "--weight", "0,0,0,0,0,0,1", "--coweight", "7",
        "--oracle", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let doc: DeltaDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.to, vec![0, 0, 0, 0, 0, 0, 1]);
    assert_eq!(doc.equal, Some(true));
    assert_eq!(doc.oracle.as_deref(), Some(&[0, 0, 0, 0, 0, 0, 1][..]));
}

#[test]
fn reflect_applies_rightmost_first() {
    let (code, out, _) = call(&["reflect", "--type", "A3", "--word", "1,2,3", "--weight", "0,1,0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "[-1, 0, 1]\n");
    // σ_2σ_1(λ_1) = σ_2(−λ_1+λ_2) = −λ_1+λ_2−(−λ_1+2λ_2−λ_3)
    let (_, out, _) = call(&["reflect", "--type", "A3", "--word", "2,1", "--weight", "1,0,0"]);
    assert_eq!(out, "[0, -1, 1]\n");
    let (_, out, _) = call(&["reflect", "--type", "A3", "--word", "", "--weight", "-1,2,0"]);
    assert_eq!(out, "[-1, 2, 0]\n");
}

#[test]
fn verify_vacuous_for_exceptional_without_miniscule() {
    for t in ["G2", "F4", "E8"] {
        let (code, out, _) = call(&["verify", "--type", t]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("0 checks run"), "{out}");
        assert!(out.contains("PASS"));
    }
    let (_, out, _) = call(&["verify", "--type", "G2", "--format", "json"]);
    let doc: VerifyDoc = serde_json::from_str(&out).unwrap();
    assert!(doc.passed);
    assert!(doc.checks.is_empty());
}

#[test]
fn verify_c4_and_all_types() {
    let (code, out, _) = call(&["verify", "--type", "C4", "--level", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("FAIL"));
    let (code, out, err) = call(&["verify", "--all"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(!out.contains("FAIL"));
    assert!(out.contains("E7: "));
    assert!(out.contains("A8: "));
}

#[test]
fn table_json_schema_and_round_trip() {
    let (code, out, _) = call(&["table", "--type", "A2", "--level", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let docs: Vec<TableDoc> = serde_json::from_str(&out).unwrap();
    assert_eq!(docs.len(), 2);
    for d in &docs {
        assert_eq!(d.map.len(), 3);
        let mut targets: Vec<_> = d.map.iter().map(|e| e.to.clone()).collect();
        targets.sort();
        let mut sources: Vec<_> = d.map.iter().map(|e| e.from.clone()).collect();
        sources.sort();
        assert_eq!(sources, targets);
    }
    // typed and untyped re-serialisation are byte-identical
    assert_eq!(serde_json::to_string(&docs).unwrap() + "\n", out);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap() + "\n", out);

    let (_, single, _) = call(&["table", "--type", "D6", "--level", "2", "--coweight", "1", "--format", "json"]);
    assert!(single.starts_with(r#"{"algebra":{"family":"D","rank":6},"level":2,"coweight":1,"map":[{"from":["#));
    let value: serde_json::Value = serde_json::from_str(&single).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap() + "\n", single);
    assert!(!single.contains('.'), "no floats");
}

#[test]
fn table_b3_json_is_bijective() {
    let (code, out, _) = call(&["table", "--type", "B3", "--level", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let docs: Vec<TableDoc> = serde_json::from_str(&out).unwrap();
    assert_eq!(docs.len(), 1);
    assert_eq!(docs[0].coweight, 1);
    assert_eq!(docs[0].algebra.family, "B");
}

#[test]
fn orbits_e6_level_one() {
    let (code, out, _) = call(&["orbits", "--type", "E6", "--level", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1);
    let (_, out, _) = call(&["orbits", "--type", "A1", "--level", "2", "--format", "json"]);
    let doc: OrbitsDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.orbits, vec![vec![vec![0], vec![2]], vec![vec![1]]]);
}

#[test]
fn info_d6() {
    let (code, out, _) = call(&["info", "--type", "D6", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: InfoDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.miniscule, vec![1, 5, 6]);
    assert_eq!(doc.fundamental_group_order, 4);
    assert_eq!(doc.theta.weights, vec![0, 1, 0, 0, 0, 0]);
    assert_eq!(doc.comarks, vec![1, 2, 2, 2, 1, 1]);
}

#[test]
fn invalid_input_exits_two() {
    let cases: &[&[&str]] = &[
        &["delta", "--type", "A2", "--level", "2", "--weight", "1,0,0", "--coweight", "1"],
        &["delta", "--type", "A2", "--level", "1", "--weight", "1,1", "--coweight", "1"],
        &["delta", "--type", "A2", "--level", "0", "--weight", "0,0", "--coweight", "1"],
        &["delta", "--type", "B3", "--level", "1", "--weight", "0,0,0", "--coweight", "2"],
        &["delta", "--type", "A2", "--level", "1", "--weight", "x,0", "--coweight", "1"],
        &["info", "--type", "D3"],
        &["info", "--type", "Q7"],
        &["reflect", "--type", "A2", "--word", "1,3", "--weight", "0,0"],
        &["table", "--type", "E6", "--level", "1", "--coweight", "2"],
        &["verify", "--type", "A2", "--level", "0"],
        &["verify"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}: {out}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn binary_streams_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_deltashift");
    let ok = Command::new(bin)
        .args(["delta", "--type", "A1", "--level", "3", "--weight", "1", "--coweight", "1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "[2]\n");

    let bad = Command::new(bin)
        .args(["info", "--type", "D3"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
}
