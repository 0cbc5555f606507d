use std::process::{Command, Output};

fn trigpos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigpos")).args(args).env_remove("TRIGPOS_WORKERS").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn squared_point_reports_pass() {
    let out = trigpos(&["verify", "thm23", "--M", "1", "--N", "1", "--k", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains(r#""status":"pass""#));
    assert!(text.contains(r#""b":["2","2"]"#));
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = parsed[0].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["check_id", "computed", "params", "runtime_ms", "status", "witnesses"]);
}

#[test]
fn precondition_and_usage_errors_exit_2() {
    let gap = trigpos(&["verify", "thm23", "--M", "5", "--N", "1", "--k", "1"]);
    assert_eq!(gap.status.code(), Some(2));
    assert!(gap.stdout.is_empty());
    assert!(String::from_utf8_lossy(&gap.stderr).contains("|M - N| <= k"));
    assert_eq!(trigpos(&["verify", "thm23", "--M", "1", "--N", "1"]).status.code(), Some(2));
    assert_eq!(trigpos(&["verify", "thm23", "--M", "1", "--N", "1", "--k", "1", "--bogus"]).status.code(), Some(2));
    assert_eq!(trigpos(&["scan", "conjecture", "--r", "3..1"]).status.code(), Some(2));
}

#[test]
fn empty_grid_emits_empty_output() {
    // every point of this range violates the gap condition and is dropped
    let json = trigpos(&["verify", "thm23", "--M", "5..6", "--N", "0", "--k", "1"]);
    assert_eq!(json.status.code(), Some(0));
    assert_eq!(stdout(&json), "[]\n");
    let csv = trigpos(&["verify", "thm23", "--M", "5..6", "--N", "0", "--k", "1", "--format", "csv"]);
    assert_eq!(stdout(&csv), "check_id,params,status,series,index,value\n");
}

#[test]
fn scan_is_identical_across_worker_counts() {
    let args = ["scan", "conjecture", "--r", "2", "--max-mn", "3", "--k", "1..2"];
    let one = trigpos(&[&args[..], &["--workers", "1"]].concat());
    let four = trigpos(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert!(!stdout(&one).contains(r#""status":"fail""#));
    let env = Command::new(env!("CARGO_BIN_EXE_trigpos")).args(args).env("TRIGPOS_WORKERS", "3").output().unwrap();
    assert_eq!(env.stdout, one.stdout);
}

#[test]
fn budget_exhaustion_is_a_skip() {
    let out = trigpos(&["verify", "thm23", "--M", "2", "--N", "2", "--k", "1", "--max-items", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(r#""status":"skipped""#));
}

#[test]
fn output_file_and_csv() {
    let dir = std::env::temp_dir().join(format!("trigpos-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("closed.csv");
    let out =
        trigpos(&["verify", "closed-forms", "--m-max", "2", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == r#"closed_forms,"{""m_max"":2}",pass,M01.even,1,2"#));
    assert!(!text.contains('\r'));
    let bad = trigpos(&["verify", "weights", "--output", dir.join("missing/x.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn every_checker_runs() {
    let cases: &[&[&str]] = &[
        &["verify", "iks", "--M", "0..3", "--N", "0..3", "--k", "1..2"],
        &["verify", "thm24", "--M", "0..3", "--N", "0..3", "--k", "1"],
        &["verify", "weights", "--l-max", "6"],
        &["verify", "jacobi", "--ab", "1/2,1/2", "--ab", "0,0", "--l-max", "5"],
        &["verify", "sine", "--M", "2", "--N", "1", "--k", "1"],
        &["verify", "convolution", "--pairs", "1,1", "--pairs", "2,1", "--k", "1"],
        &["verify", "involution", "--M", "0..3", "--N", "0..3", "--k", "1..2"],
        &["verify", "surjection", "--M", "1..3", "--N", "1..3", "--k", "1"],
    ];
    for args in cases {
        let out = trigpos(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!stdout(&out).contains(r#""status":"fail""#), "{args:?}");
    }
}
