//! End-to-end checks of the command-line interface: file formats, the
//! build/extract pipeline, solver subcommands, and exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn dtcover(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dtcover"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn graph_generation_and_covers() {
    let dir = tempfile::tempdir().unwrap();
    let out = dtcover(dir.path(), &["graph", "gen", "--n", "8", "--d", "3", "--seed", "5"]);
    let text = stdout(&out);
    fs::write(dir.path().join("g.txt"), &text).unwrap();
    // deterministic under the seed
    let again = dtcover(dir.path(), &["graph", "gen", "--n", "8", "--d", "3", "--seed", "5"]);
    assert_eq!(text, stdout(&again));

    let vc = stdout(&dtcover(dir.path(), &["graph", "vc", "--graph", "g.txt"]));
    assert!(vc.starts_with("size "));
    let pvc = stdout(&dtcover(
        dir.path(),
        &["graph", "pvc", "--graph", "g.txt", "--alpha", "1/4"],
    ));
    assert!(pvc.starts_with("size "));
}

#[test]
fn gadget_eval_and_indicator() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.txt"), "2 1\n1 2\n").unwrap();
    let ind = stdout(&dtcover(
        dir.path(),
        &["gadget", "ind", "--graph", "g.txt", "--ell", "2", "--edge", "1,2"],
    ));
    assert_eq!(ind.trim(), "11|11|11");
    let val = stdout(&dtcover(
        dir.path(),
        &["gadget", "eval", "--graph", "g.txt", "--ell", "2", "--input", "11|11|11"],
    ));
    assert_eq!(val.trim(), "1");
    let val = stdout(&dtcover(
        dir.path(),
        &["gadget", "eval", "--graph", "g.txt", "--ell", "2", "--input", "110111"],
    ));
    assert_eq!(val.trim(), "0");
}

#[test]
fn build_extract_pipeline_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.txt"), "4 4\n1 2\n1 4\n2 4\n3 4\n").unwrap();
    let report = stdout(&dtcover(
        dir.path(),
        &["build", "tree", "--graph", "g.txt", "--ell", "1"],
    ));
    let value: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(value["cover"], serde_json::json!([1, 4]));
    fs::write(
        dir.path().join("tree.json"),
        serde_json::to_string(&value["tree"]).unwrap(),
    )
    .unwrap();
    let cover = stdout(&dtcover(
        dir.path(),
        &[
            "extract", "cover", "--graph", "g.txt", "--ell", "1", "--tree", "tree.json",
            "--format", "json",
        ],
    ));
    let cover: serde_json::Value = serde_json::from_str(&cover).unwrap();
    assert_eq!(cover["cover"], serde_json::json!([1, 4]));

    // DOT output carries the layer colors
    let dot = stdout(&dtcover(
        dir.path(),
        &["build", "tree", "--graph", "g.txt", "--ell", "1", "--dot"],
    ));
    assert!(dot.contains("digraph"));
    assert!(dot.contains("lightblue"));
}

#[test]
fn coreset_minimize_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.txt"), "4 4\n1 2\n1 4\n2 4\n3 4\n").unwrap();
    let set = stdout(&dtcover(
        dir.path(),
        &["coreset", "build", "--graph", "g.txt", "--ell", "1"],
    ));
    assert!(set.starts_with("8 21\n")); // N = 8, m + m(2l+2) + 1 = 21
    fs::write(dir.path().join("set.txt"), &set).unwrap();
    let min = stdout(&dtcover(
        dir.path(),
        &["minimize", "set", "--points", "set.txt", "--format", "json"],
    ));
    let min: serde_json::Value = serde_json::from_str(&min).unwrap();
    assert_eq!(min["size"], serde_json::json!(12)); // 2 (VC + m) = 2 (2+4)

    let dist = stdout(&dtcover(
        dir.path(),
        &["coreset", "build", "--graph", "g.txt", "--ell", "1", "--weighted"],
    ));
    fs::write(dir.path().join("dist.txt"), &dist).unwrap();
    let front = stdout(&dtcover(
        dir.path(),
        &["minimize", "front", "--dist", "dist.txt", "--size-cap", "12"],
    ));
    assert!(front.contains("error 1/4")); // the size-0 entry
    assert!(front.contains("error 0"));

    // full-cube minimization from a truth-table file
    fs::write(dir.path().join("xor.tt"), "0110").unwrap();
    let min = stdout(&dtcover(
        dir.path(),
        &["minimize", "exact", "--table", "xor.tt", "--format", "json"],
    ));
    let min: serde_json::Value = serde_json::from_str(&min).unwrap();
    assert_eq!(min["size"], serde_json::json!(3));
}

#[test]
fn decider_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.txt"), "2 1\n1 2\n").unwrap();
    let yes = dtcover(
        dir.path(),
        &[
            "reduce", "dtlearn", "--graph", "g.txt", "-k", "1", "--test-mode-ell", "1",
        ],
    );
    assert_eq!(yes.status.code(), Some(0));
    let no = dtcover(
        dir.path(),
        &[
            "reduce", "dtlearn", "--graph", "g.txt", "-k", "0", "--test-mode-ell", "1",
        ],
    );
    assert_eq!(no.status.code(), Some(1));
    let err = dtcover(dir.path(), &["graph", "vc", "--graph", "missing.txt"]);
    assert_eq!(err.status.code(), Some(2));
}

#[test]
fn dtmin_subcommand_reports() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.txt"), "3 2\n1 2\n2 3\n").unwrap();
    let out = stdout(&dtcover(
        dir.path(),
        &[
            "reduce", "dtmin", "--graph", "g.txt", "--minimizer", "exact", "--test-mode-ell",
            "3", "--format", "json",
        ],
    ));
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["cover"], serde_json::json!([2]));
    assert_eq!(report["vc"], serde_json::json!(1));
    assert_eq!(report["extraction_bound_ok"], serde_json::json!(true));
}

#[test]
fn report_subcommand_pretty_prints() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.txt"), "2 1\n1 2\n").unwrap();
    let json = dtcover(
        dir.path(),
        &[
            "reduce", "dtlearn", "--graph", "g.txt", "-k", "1", "--test-mode-ell", "1",
            "--format", "json",
        ],
    );
    fs::write(dir.path().join("run.json"), stdout(&json)).unwrap();
    let text = stdout(&dtcover(dir.path(), &["report", "--file", "run.json"]));
    assert!(text.contains("verdict"));
}
