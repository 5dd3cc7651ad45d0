use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use shapestab::VerdictJson;

fn shapestab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shapestab"))
        .args(args)
        .output()
        .unwrap()
}

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn check_json_exit_code_contract() {
    for (file, code) in [
        ("stallings.problem", 1),
        ("identity.problem", 0),
        ("solenoid.problem", 1),
        ("solid_torus_k0.problem", 0),
    ] {
        let out = shapestab(&["check", "--json", &corpus(file)]);
        let v: VerdictJson = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(out.status.code(), Some(code), "{file}");
        assert_eq!(v.shape_equivalence, code == 0);
    }
}

#[test]
fn identity_reports_full_stable_rank() {
    let out = shapestab(&["check", "--json", &corpus("identity.problem")]);
    let v: VerdictJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.stable_rank, Some(2));
}

#[test]
fn member_rank_abelianize() {
    let file = corpus("stallings.problem");
    let out = shapestab(&["member", &file, "y"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(out.stdout, b"false\n");
    let out = shapestab(&["rank", &file]);
    assert_eq!(out.stdout, b"2\n");
    let out = shapestab(&["abelianize", &file]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "ring: Z\ndim: 2\n1 2\n2 3\n");
}

#[test]
fn abelianize_output_is_a_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = shapestab(&["abelianize", &corpus("solid_torus_k2.problem")]);
    let path = dir.path().join("a.matrix");
    fs::write(&path, out.stdout).unwrap();
    let out = shapestab(&["matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("never stabilizes"));
}

#[test]
fn errors_exit_two_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.problem");
    fs::write(&path, "generators: x y\nx -> x\nx -> y\n").unwrap();
    let out = shapestab(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let out = shapestab(&["check", "--max-word-len", "2", &corpus("stallings.problem")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_directory_argument() {
    let dir = tempfile::tempdir().unwrap();
    let out = shapestab(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let out = shapestab(&["corpus", &corpus("")]);
    assert_eq!(out.status.code(), Some(0));
}
