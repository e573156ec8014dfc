use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn rcop_toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcop-toric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_paw_is_rcop_block() {
    let out = rcop_toric(&["check", &data("paw.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rcop"], true);
    assert_eq!(v["block"], true);
    assert_eq!(v["group"]["order"], "2");
}

#[test]
fn check_frets_heads_is_not_block() {
    let out = rcop_toric(&["check", &data("frets_heads.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["block"], false);
    assert_eq!(v["rcop"], true);
    assert_eq!(v["block_witness"]["block"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn check_negative_rcop_verdicts() {
    for file in ["path3.json", "two_level_tree_recolored.json"] {
        let out = rcop_toric(&["check", &data(file), "--format", "text"]);
        assert_eq!(out.status.code(), Some(1), "{file}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("rcop: no"));
    }
}

#[test]
fn basis_paw_has_six_sorted_moves() {
    let out = rcop_toric(&["basis", &data("paw.json")]);
    assert_eq!(out.status.code(), Some(0));
    let moves = json(&out);
    let moves = moves.as_array().unwrap();
    assert_eq!(moves.len(), 6);
    assert_eq!(
        moves[0],
        serde_json::json!({"plus": [[1, 1]], "minus": [[2, 2]]})
    );
    let text = rcop_toric(&[
        "basis",
        &data("paw.json"),
        "--part",
        "uncolored",
        "--format",
        "text",
    ]);
    assert_eq!(
        String::from_utf8(text.stdout).unwrap(),
        "(1,3)(2,4)-(1,4)(2,3)\n(1,3)(3,4)-(1,4)(3,3)\n(2,3)(3,4)-(2,4)(3,3)\n"
    );
}

#[test]
fn basis_output_passes_verify() {
    for file in ["paw.json", "two_level_tree.json"] {
        let basis = rcop_toric(&["basis", &data(file)]);
        let path = scratch(
            &format!("basis_{file}"),
            &String::from_utf8(basis.stdout).unwrap(),
        );
        let out = rcop_toric(&["verify", &data(file), "--basis", &path, "--trials", "3"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn verify_rejects_a_non_move() {
    let path = scratch(
        "bad_basis.json",
        r#"[{"plus": [[1, 2]], "minus": [[3, 4]]}]"#,
    );
    let out = rcop_toric(&[
        "verify",
        &data("paw.json"),
        "--basis",
        &path,
        "--trials",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["kernel"]["outside"].as_array().unwrap().len(), 1);
}

#[test]
fn outputs_are_byte_identical() {
    for args in [
        vec!["verify", "--seed", "7", "--trials", "2"],
        vec!["fibers", "--degree", "2"],
        vec!["completion"],
        vec!["audit"],
        vec!["check"],
        vec!["matrix", "--map", "full"],
    ] {
        let mut full = args.clone();
        let file = data("two_level_tree.json");
        full.insert(1, &file);
        let a = rcop_toric(&full);
        let b = rcop_toric(&full);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn fibers_report_counts() {
    let out = rcop_toric(&["fibers", &data("paw.json"), "--degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degree_bound"], 2);
    assert_eq!(v["disconnected"], serde_json::json!([]));
    let capped = rcop_toric(&["fibers", &data("two_level_tree.json"), "--cap", "2"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("more than 2 points"));
}

#[test]
fn completion_of_paw() {
    let out = rcop_toric(&["completion", &data("paw.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let added = v["added"].as_array().unwrap();
    assert_eq!(added.len(), 2);
    assert_eq!(added[0]["color"], added[1]["color"]);
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn matrix_text_layout() {
    let out = rcop_toric(&["matrix", &data("paw.json"), "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with(
        "         11 12 13 14 22 23 24 33 34 44\nvertex:r  2  2  1  1  2  1  1  0  0  0\n"
    ));
}

#[test]
fn audit_passes_on_rcop_graphs() {
    let out = rcop_toric(&["audit", &data("two_level_tree.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["checks"].as_array().unwrap().len(), 5);
}

#[test]
fn input_errors_exit_with_two() {
    let missing = rcop_toric(&["check", "/nonexistent/graph.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(missing.stdout.is_empty());

    let broken = scratch("broken.json", "{\"vertices\": [");
    assert_eq!(rcop_toric(&["check", &broken]).status.code(), Some(2));

    let gap = scratch(
        "gap.json",
        r#"{"vertices": [{"id": 1, "color": "a"}, {"id": 3, "color": "a"}], "edges": []}"#,
    );
    let out = rcop_toric(&["check", &gap]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex id 2 is missing"));

    assert_eq!(
        rcop_toric(&["bogus", &data("paw.json")]).status.code(),
        Some(2)
    );
}

#[test]
fn preconditions_exit_with_one() {
    assert_eq!(
        rcop_toric(&["basis", &data("path3.json")]).status.code(),
        Some(1)
    );
    assert_eq!(
        rcop_toric(&["matrix", &data("frets_heads.json")])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn thread_variable_is_validated() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_rcop-toric"))
            .args(["fibers", &data("paw.json"), "--degree", "2"])
            .env("RCOP_TORIC_THREADS", value)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}
