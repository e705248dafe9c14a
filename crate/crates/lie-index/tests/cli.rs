use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use lie_index::cli::run;
use tempfile::TempDir;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lie_index(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lie-index").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn emit(dir: &TempDir, name: &str, params: &[&str]) -> PathBuf {
    let path = dir.path().join(format!("{}.lie", params.iter().fold(name.replace(['(', ')', ','], "_"), |a, p| a + p)));
    let mut args = vec!["catalog", "emit", name];
    args.extend(params);
    args.extend(["-o", path.to_str().unwrap()]);
    let o = lie_index(&args);
    assert_eq!(o.code, 0, "{}", o.stderr);
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn index_of_q10() {
    let dir = TempDir::new().unwrap();
    let q10 = emit(&dir, "Q", &["n=10"]);
    let o = lie_index(&["index", s(&q10)]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "rank 8, index 2\nmethod both, seed 0, trials 3, bound 65536\n");
    let o = lie_index(&["index", s(&q10), "--method", "symbolic"]);
    assert_eq!(o.stdout.lines().next(), Some("rank 8, index 2"));
}

#[test]
fn zero_functional_is_not_regular() {
    let dir = TempDir::new().unwrap();
    let l5 = emit(&dir, "L", &["n=5"]);
    let o = lie_index(&["regular", s(&l5), "--check", "0,0,0,0,0"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "kernel dim 5, not regular\nindex 3\n");
    let o = lie_index(&["regular", s(&l5), "--check", "0,0,-1,0,0"]);
    assert_eq!(o.stdout, "kernel dim 3, regular\nindex 3\n");
    let o = lie_index(&["regular", s(&l5), "--check", "1,2"]);
    assert_eq!(o.code, 1);
    let ab = write(&dir, "ab.lie", "dim 2\n");
    assert_eq!(lie_index(&["regular", s(&ab), "--check", "0,0"]).stdout, "kernel dim 2, regular\nindex 2\n");
}

#[test]
fn find_and_family() {
    let dir = TempDir::new().unwrap();
    let l6 = emit(&dir, "L", &["n=6"]);
    let o = lie_index(&["regular", s(&l6), "--find"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("regular functional ("), "{}", o.stdout);
    let o = lie_index(&["regular", s(&l6), "--family", "free:1,2;nonzero:3-6"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("supported"));
    let q4 = emit(&dir, "Q", &["n=4"]);
    let o = lie_index(&["regular", s(&q4), "--family", "free:1,2,3;allnonzero:4"]);
    assert_eq!(o.code, 1, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("refuted-necessity-sample"), "{}", o.stdout);
    let o = lie_index(&["regular", s(&q4), "--family", "free:1,2,3;bogus:4"]);
    assert!(o.code == 1 && o.stderr.contains("unknown clause"));
    let o = lie_index(&["regular", s(&l6), "--minors"]);
    assert_eq!(o.code, 0);
    assert!(!o.stdout.is_empty());
}

#[test]
fn parse_errors_name_the_position() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.lie", "dim 3\nbracket 2 1 3 1\n");
    let o = lie_index(&["validate", s(&bad)]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.starts_with("error: "), "{}", o.stderr);
    assert!(o.stderr.contains("line 2, column 9") && o.stderr.contains("i < j"), "{}", o.stderr);
}

#[test]
fn validate_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let heis = write(&dir, "h.lie", "dim 3\nbracket 1 2 3 1\n");
    let o = lie_index(&["validate", s(&heis)]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "valid\n"));
    let broken = write(&dir, "x.lie", "dim 3\nbracket 1 2 3 1\nbracket 1 3 1 1\n");
    let o = lie_index(&["validate", s(&broken)]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("invalid: 1 nonzero Jacobi component\n"), "{}", o.stdout);
    assert_eq!(lie_index(&["index", s(&broken)]).code, 1);
    assert_eq!(lie_index(&["index", s(&heis), "--method", "fast"]).code, 2);
    assert_eq!(lie_index(&["frobnicate"]).code, 2);
    assert_eq!(lie_index(&["regular", s(&heis)]).code, 2);
    assert_eq!(lie_index(&["regular", s(&heis), "--find", "--minors"]).code, 2);
    assert_eq!(lie_index(&["index", "/nonexistent/file.lie"]).code, 1);
    assert_eq!(lie_index(&["catalog", "emit", "nope"]).code, 1);
    assert_eq!(lie_index(&["catalog", "emit", "L", "n=2"]).code, 1);
    assert_eq!(lie_index(&["catalog", "emit", "L", "n=5", "m=1"]).code, 1);
}

#[test]
fn json_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f7 = emit(&dir, "F7_2", &[]);
    for args in [
        vec!["--json", "report", s(&f7), "--seed", "7"],
        vec!["--json", "index", s(&f7), "--seed", "7"],
        vec!["--json", "regular", s(&f7), "--find", "--seed", "7"],
    ] {
        let a = lie_index(&args);
        let b = lie_index(&args);
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a.stdout, b.stdout);
        let doc: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(doc["schema"], 1);
        assert_eq!(doc["dim"], 7);
    }
    let doc: serde_json::Value =
        serde_json::from_str(&lie_index(&["--json", "report", s(&f7), "--seed", "7"]).stdout).unwrap();
    assert_eq!(doc["index"]["index"], 3);
    assert_eq!(doc["filiform"], true);
    assert_eq!(doc["characteristic_sequence"]["parts"], serde_json::json!([6, 1]));
}

#[test]
fn catalog_list_and_emit() {
    let o = lie_index(&["catalog", "list"]);
    assert_eq!(o.code, 0);
    for name in ["L", "Q", "F7_1", "T(n,n-4)", "eps3(9,5)", "tau(2n+1,lam5..)"] {
        assert!(o.stdout.lines().any(|l| l.split_whitespace().next() == Some(name)), "missing {name}");
    }
    let doc: serde_json::Value = serde_json::from_str(&lie_index(&["--json", "catalog", "list"]).stdout).unwrap();
    assert!(doc["entries"].as_array().unwrap().len() >= 30);

    let o = lie_index(&["catalog", "emit", "F3_1"]);
    assert_eq!(o.stdout, "dim 3\nname F3_1\nbracket 1 2 3 1\n");
    let o = lie_index(&["catalog", "emit", "F7_3"]);
    assert_eq!(o.code, 0);
    assert!(o.stderr.starts_with("warning: F7_3 fails the Jacobi identity"), "{}", o.stderr);
    let doc: serde_json::Value =
        serde_json::from_str(&lie_index(&["--json", "catalog", "emit", "F7_3"]).stdout).unwrap();
    assert_eq!(doc["status"], "unverified-transcription");
}

#[test]
fn deformation_of_l6() {
    let dir = TempDir::new().unwrap();
    let l6 = emit(&dir, "L", &["n=6"]);
    let pert = write(&dir, "p.lie", "dim 6\nbracket 2 3 6 1\n");
    let o = lie_index(&["deform", s(&l6), s(&pert), "--t", "1,2,1/3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(
        o.stdout,
        "t = 0: index 4\nt = 1: index 2\nt = 2: index 2\nt = 1/3: index 2\ngeneric index 2 <= index at t = 0\n"
    );
    assert_eq!(lie_index(&["deform", s(&l6), s(&pert), "--t", "1,2"]).code, 1);
    let o = lie_index(&["deform", s(&l6), s(&l6), "--t", "-1,2,3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
}

#[test]
fn report_text() {
    let dir = TempDir::new().unwrap();
    let l = emit(&dir, "Lsplit(n)", &["n=7"]);
    let o = lie_index(&["report", s(&l)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    for line in ["valid: yes", "nilpotent: yes", "filiform: no", "quasi-filiform: yes", "frobenius: no"] {
        assert!(o.stdout.lines().any(|l| l == line), "missing `{line}` in\n{}", o.stdout);
    }
}

#[test]
fn expect_reports_every_line() {
    let o = lie_index(&["expect"]);
    let last = o.stdout.lines().last().unwrap();
    assert!(last.contains("passed"), "{last}");
    let failed = o.stdout.lines().filter(|l| l.starts_with("FAIL")).count();
    assert_eq!(o.code, if failed == 0 { 0 } else { 1 });
    assert!(o.stdout.lines().any(|l| l.starts_with("PASS") && l.contains("filiform-L")));
    assert!(o.stdout.lines().any(|l| l.starts_with("FLAGGED")));
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lie-index"))
        .args(["index", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"dim 3\nbracket 1 2 3 1\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("rank 2, index 1\n"));
    let status = Command::new(env!("CARGO_BIN_EXE_lie-index")).arg("--bogus").output().unwrap().status;
    assert_eq!(status.code(), Some(2));
}
