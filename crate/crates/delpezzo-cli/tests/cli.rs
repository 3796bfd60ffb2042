//! End-to-end tests of the binary: worked examples, exit codes, and the
//! determinism guarantees of the JSON surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delpezzo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn cohomology_worked_example() {
    let out = run(&[
        "cohomology",
        "--surface",
        "P2",
        "--pi",
        "1,0,0,0,0,0,0,0,0,0",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["rank"], 3);
    assert_eq!(doc["dims"], serde_json::json!([1, 5, 7]));
    assert_eq!(doc["method"], "rank-formula");
}

#[test]
fn cohomology_with_matrix_in_text_mode() {
    let out = run(&[
        "cohomology",
        "--surface",
        "P1xP1",
        "--pi",
        "0,1,0,0,0,0,0,0,0",
        "--matrix",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("rank: 4"));
    assert!(text.contains("dims: (1, 2, 5)"));
    assert!(text.contains("matrix (9x6):"));
}

#[test]
fn genericity_failure_exits_nonzero() {
    let out = run(&["genericity", "--points", "[1,0,0] [1,1,0] [1,2,0]"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("no-three-colinear: false"));
    assert!(text.contains("generic: false"));
}

#[test]
fn genericity_success_reports_both_predicates() {
    let out = run(&[
        "genericity",
        "--points",
        "[1,0,0] [1,1,0] [1,0,1] [1,1,1]",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["generic"], true);
    assert_eq!(doc["independent_on_cubics"], true);
}

#[test]
fn tables_includes_the_b8_row() {
    let out = run(&["tables"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("B4: (1, 0, 6)"));
    assert!(text.contains("B5: (1, 0, 7)"));
    assert!(text.contains("B6: (1, 0, 8)"));
    assert!(text.contains("B7: (1, 0, 9)"));
    assert!(text.contains("B8: (1, 0, 10)"));

    let out = run(&["tables", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 10);
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        vec!["tables", "--format", "json"],
        vec![
            "cohomology",
            "--surface",
            "B2",
            "--pi",
            "0,1,0,-1,0,0,0,0,0,0",
            "--format",
            "json",
            "--matrix",
        ],
        vec!["basis", "--surface", "B3", "--format", "json"],
        vec![
            "crosscheck",
            "--surface",
            "P2",
            "--pi",
            "1,2,3,4,5,6,7,8,9,10",
            "--format",
            "json",
        ],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout_of(&out);
        let trimmed = text.strip_suffix('\n').expect("newline-terminated");
        let value: serde_json::Value = serde_json::from_str(trimmed).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), trimmed, "{args:?}");
    }
}

#[test]
fn identical_requests_give_identical_bytes() {
    let args = ["tables", "--format", "json"];
    let first = stdout_of(&run(&args));
    let second = stdout_of(&run(&args));
    assert_eq!(first, second);
}

#[test]
fn dimension_mismatch_is_a_structured_error() {
    let out = run(&[
        "cohomology",
        "--surface",
        "P2",
        "--pi",
        "1,2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["error"]["kind"], "dimension-mismatch");
}

#[test]
fn non_vanishing_pi_names_the_point() {
    let out = run(&[
        "cohomology",
        "--surface",
        "B1",
        "--pi",
        "1,0,0,0,0,0,0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("pi-not-vanishing"));
    assert!(stderr.contains("[1,0,0]"));
}

#[test]
fn bracket_command_matches_hand_computation() {
    let out = run(&["bracket", "--pi", "x", "--vector", "1; 0"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("[pi, v]: -1"));

    let out = run(&[
        "bracket", "--pi", "1", "--vector", "x; 0", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["bracket"], "1");
}

#[test]
fn bad_field_text_is_a_parse_error() {
    let out = run(&["bracket", "--pi", "x +", "--vector", "1; 0"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("parse"));
}

#[test]
fn basis_counts_per_surface() {
    let out = run(&["basis", "--surface", "P2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["vector_basis"].as_array().unwrap().len(), 8);
    assert_eq!(doc["bivector_basis"].as_array().unwrap().len(), 10);

    let out = run(&["basis", "--surface", "B5", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["vector_basis"].as_array().unwrap().len(), 0);
    assert_eq!(doc["bivector_basis"].as_array().unwrap().len(), 5);
    assert_eq!(doc["points"].as_array().unwrap().len(), 5);
}

#[test]
fn explicit_standard_points_match_the_default() {
    let default = stdout_of(&run(&["basis", "--surface", "B3", "--format", "json"]));
    let explicit = stdout_of(&run(&[
        "basis",
        "--surface",
        "B3",
        "--points",
        "[1,0,0] [1,1,0] [1,0,1]",
        "--format",
        "json",
    ]));
    assert_eq!(default, explicit);
}

#[test]
fn crosscheck_reports_clean_for_blowups() {
    // a2 = 1, a4 = -1 keeps a7 = -(a2+a4) = 0 and vanishes at the B2 points.
    let out = run(&[
        "crosscheck",
        "--surface",
        "B2",
        "--pi",
        "0,1,0,-1,0,0,0,0,0,0",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["clean"], true);
    assert_eq!(doc["rows"], 8);
    assert_eq!(doc["cols"], 4);
}

#[test]
fn crosscheck_unsupported_surface() {
    let out = run(&[
        "crosscheck",
        "--surface",
        "B4",
        "--pi",
        "0,0,0,0,0,0,0,0,0,0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["error"]["kind"], "unsupported-surface");
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("delpezzo-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tables.json");
    let path_str = path.to_str().unwrap();
    let out = run(&["tables", "--format", "json", "--output", path_str]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let direct = stdout_of(&run(&["tables", "--format", "json"]));
    assert_eq!(written, direct);
    std::fs::remove_file(&path).ok();
}

#[test]
fn unknown_surface_is_a_parse_error() {
    let out = run(&["cohomology", "--surface", "B9", "--pi", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("parse"));
}

#[test]
fn non_generic_points_are_a_structured_error() {
    let out = run(&[
        "basis",
        "--surface",
        "B3",
        "--points",
        "[1,0,0] [1,1,0] [1,2,0]",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc["error"]["kind"], "not-generic");
}
