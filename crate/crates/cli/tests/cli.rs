use std::process::{Command, Output};

fn krank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krank")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn psl2z_csv() {
    let out = krank(&["example", "psl2z", "--range", "-2..13", "--format", "csv"]);
    assert!(out.status.success());
    let expected = "n,rank\n-2,0\n-1,0\n0,1\n1,0\n2,0\n3,1\n4,0\n5,3\n6,0\n7,1\n8,0\n9,3\n10,0\n11,1\n12,0\n13,3\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn free_group_parameter() {
    let out = krank(&["example", "free_group", "--param", "m=3", "--range", "0..2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,rank\n0,1\n1,3\n2,0\n");
}

#[test]
fn invariants_of_s5() {
    let out = krank(&["invariants", "--group", "symmetric:5", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let inv = &v["invariants"];
    assert_eq!((inv["k"].as_u64(), inv["r"].as_u64(), inv["c"].as_u64(), inv["q"].as_u64()), (Some(7), Some(7), Some(0), Some(7)));
}

#[test]
fn model_file_to_file_output() {
    let dir = std::env::temp_dir().join(format!("krank-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let model = dir.join("circle.json");
    std::fs::write(&model, r#"{"name": "circle", "kind": "cell_complex", "dims": [1, 1], "boundaries": [[[0]]]}"#).unwrap();
    let table = dir.join("out.csv");
    let out = krank(&[
        "rank-table",
        "--model",
        model.to_str().unwrap(),
        "--range",
        "0..3",
        "--format",
        "csv",
        "--output",
        table.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&table).unwrap(), "n,rank\n0,1\n1,1\n2,0\n3,0\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_datum_is_reported() {
    let dir = std::env::temp_dir().join(format!("krank-cli-missing-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let model = dir.join("c5.json");
    std::fs::write(&model, r#"{"name": "c5", "kind": "finite_group", "group": {"kind": "cyclic", "n": 5}}"#).unwrap();
    let out = krank(&["rank-table", "--model", model.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("cyclic:5") && err.contains("rank_minus1"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_arguments_fail() {
    assert!(!krank(&["example", "psl2z", "--range", "5..1"]).status.success());
    assert_eq!(krank(&["example", "nope"]).status.code(), Some(2));
    assert_eq!(krank(&["invariants", "--group", "cyclic:0"]).status.code(), Some(2));
}

#[test]
fn verify_reports_errata_and_succeeds() {
    let out = krank(&["verify", "--filter", "table/"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ERRATUM table/surface(g=2)"));
    assert!(text.contains("ERRATUM table/fn_sn(n=4)"));
    assert!(text.contains("PASS    table/psl2z"));
    assert!(text.contains(" 0 failed"));
}
