//! End-to-end tests of the `hornc` binary: stdout/stderr separation, exit
//! codes, and per-subcommand output shapes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn hornc() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hornc"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn solve_prints_the_verdict_alone_on_stdout() {
    let out = hornc()
        .args(["solve", "--timeout", "30"])
        .arg(fixture("lia_counter.smt2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "unsat\n");
}

#[test]
fn solve_reports_sat_for_a_safe_bitvector_system() {
    let out = hornc()
        .args(["solve", "--timeout", "30"])
        .arg(fixture("bv4_even.smt2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "sat\n");
}

#[test]
fn classify_describes_the_system() {
    let out = hornc()
        .arg("classify")
        .arg(fixture("lia_counter.smt2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("theory: LIA"), "{text}");
    assert!(text.contains("linearity: linear"), "{text}");
    assert!(text.contains("rules: 3"), "{text}");
    assert!(text.contains("queries: 1"), "{text}");
}

#[test]
fn emit_c_writes_a_stamped_program() {
    let out = hornc()
        .args(["emit-c", "--encoding", "forward"])
        .arg(fixture("lia_counter.smt2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("generated by hornc"), "{text}");
    assert!(text.contains("encoding: forward"), "{text}");
    assert!(text.contains("source-hash: "), "{text}");
    assert!(text.contains("reach_error"), "{text}");
}

#[test]
fn emit_c_forward_rejects_nonlinear_systems() {
    let out = hornc()
        .args(["emit-c", "--encoding", "forward"])
        .arg(fixture("lia_nonlinear.smt2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("forward"), "{}", stderr(&out));
    // the backward encoding handles the same file
    let out = hornc()
        .args(["emit-c", "--encoding", "backward"])
        .arg(fixture("lia_nonlinear.smt2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn oracle_dumps_a_parseable_derivation() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("derivation.txt");
    let out = hornc()
        .args(["oracle", "--dump-derivation"])
        .arg(&dump)
        .arg(fixture("lia_counter.smt2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "unsat\n");
    assert!(stderr(&out).contains("refutation in 11 steps"));
    let text = std::fs::read_to_string(&dump).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("step ")).count() == 11, "{text}");
    assert!(text.lines().any(|l| l.starts_with("query ")), "{text}");
}

#[test]
fn bench_emits_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["lia_counter.smt2", "bv4_even.smt2"] {
        std::fs::copy(fixture(name), dir.path().join(name)).unwrap();
    }
    let out = hornc()
        .args(["bench", "--jobs", "2", "--timeout", "30"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let csv = stdout(&out);
    assert!(csv.starts_with("task,verdict,category,wall_ms\n"), "{csv}");
    assert!(csv.contains("lia_counter.smt2,unsat,confirmed,"), "{csv}");
    assert!(csv.contains("bv4_even.smt2,sat,confirmed,"), "{csv}");
    assert!(stderr(&out).contains("Out of 2 tasks"), "{}", stderr(&out));
}

#[test]
fn input_errors_exit_with_code_two() {
    let out = hornc().args(["solve", "/no/such/file.smt2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("cannot read"), "{}", stderr(&out));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.smt2");
    std::fs::write(&bad, "(assert (oops)").unwrap();
    let out = hornc().arg("solve").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_code_one() {
    let out = hornc().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = hornc().arg("solve").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = hornc().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
