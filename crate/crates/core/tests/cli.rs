use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tipcount"))
        .args(args)
        .env_remove("TIPCOUNT_ENUMERATION_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn count_kinds() {
    assert_eq!(stdout(&["count", "rooted", "4"]), "5\n");
    assert_eq!(stdout(&["count", "vertex-pointed", "2"]), "0\n");
    assert_eq!(stdout(&["count", "edge-pair", "3"]), "3\n");
    assert_eq!(stdout(&["count", "unrooted-exact", "5"]), "3\n");
}

#[test]
fn count_json_is_golden() {
    assert_eq!(
        stdout(&["count", "unrooted-exact", "17", "--format", "json"]),
        golden("count_unrooted_17.json")
    );
}

#[test]
fn paper_is_golden() {
    assert_eq!(stdout(&["paper"]), golden("paper_17.txt"));
    assert_eq!(
        stdout(&["paper", "--format", "json", "--max-tips", "4"]),
        golden("paper_4.json")
    );
}

#[test]
fn paper_small() {
    let doc: serde_json::Value =
        serde_json::from_str(&stdout(&["paper", "--max-tips", "1", "--format", "json"])).unwrap();
    assert_eq!(doc["results"]["S1"], "1");
}

#[test]
fn enumerate_lines() {
    assert_eq!(stdout(&["enumerate", "2", "--rooted"]), "(**)\n");
    assert_eq!(stdout(&["enumerate", "4"]), "((**)(**))\n(****)\n");
    assert_eq!(stdout(&["enumerate", "6"]), golden("enumerate_6.txt"));
    let doc: serde_json::Value =
        serde_json::from_str(&stdout(&["enumerate", "4", "--rooted", "--format", "doc"])).unwrap();
    assert_eq!(doc["results"]["count"], 5);
}

#[test]
fn enumerate_guard() {
    let out = run(&["enumerate", "11"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit is 10"));
    assert!(run(&["enumerate", "11", "--limit", "11"]).status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_tipcount"))
        .args(["enumerate", "11"])
        .env("TIPCOUNT_ENUMERATION_LIMIT", "11")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn bounds_from_flags() {
    assert_eq!(
        stdout(&["bounds", "--b1", "0", "--g", "0", "--b2", "1"]),
        golden("bounds_rational.txt")
    );
    let doc: serde_json::Value = serde_json::from_str(&stdout(&[
        "bounds", "--b1", "2", "--g", "1", "--b2", "1", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(doc["results"]["projective"]["cusps"]["rational"], "19/1");
    assert_eq!(doc["results"]["irreducible"]["cusps"]["floor"], "19");
}

#[test]
fn bounds_affine_bridges_to_projective() {
    let affine = stdout(&[
        "bounds", "--b0-aff", "1", "--b1-aff", "0", "--p", "1", "--g", "0", "--b2", "1",
        "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&affine).unwrap();
    assert_eq!(doc["results"]["b1"], 0);
    assert_eq!(doc["results"]["projective"]["cusps"]["rational"], "17/2");
    assert_eq!(doc["results"]["affine"]["cusps"]["rational"], "17/2");
}

#[test]
fn bounds_from_document() {
    let dir = std::env::temp_dir().join(format!("tipcount-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("curve.json");
    std::fs::write(
        &path,
        r#"{"b1": 0, "b2": 1, "g": 0, "branches": [[0], [0], [0]]}"#,
    )
    .unwrap();
    let out = stdout(&[
        "bounds",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out, golden("bounds_three_cusps.json"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_statuses() {
    // inconsistent bridge identity
    let out = run(&[
        "bounds", "--b1", "5", "--b0-aff", "1", "--b1-aff", "0", "--p", "1", "--g", "0", "--b2",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["count", "rooted", "0"]).status.code(), Some(2));
    assert_eq!(run(&["count", "bogus", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["bounds", "--b1", "0", "--g", "0", "--b2", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&[
            "bounds",
            "--b1",
            "0",
            "--g",
            "0",
            "--b2",
            "1",
            "--branches",
            "0,3"
        ])
        .status
        .code(),
        Some(3)
    );
}
