use std::path::PathBuf;
use std::process::{Command, Output};

use fstable::cli::Report;

fn problems() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/problems")
}

fn fstable(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fstable")).args(args).output().unwrap()
}

fn problem(name: &str) -> String {
    problems().join(name).display().to_string()
}

/// Writes `contents` to a fresh file in the temp directory.
fn scratch(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("fstable-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_reports_both_members() {
    let o = fstable(&["check", &problem("ex2.prob")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("J: member"));
    assert!(text.contains("M: member"));
}

#[test]
fn test_ideal_of_the_node() {
    let o = fstable(&["test-ideal", &problem("ex1.prob"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    let t = r.results.iter().find(|e| e.label == "test-ideal").unwrap();
    assert_eq!(t.basis.as_deref(), Some(&["x".to_string(), "y".to_string()][..]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["enumerate", "ex3.prob"],
        vec!["enumerate", "ex3.prob", "--json"],
        vec!["test-ideal", "ex2_gorenstein.prob"],
        vec!["gb", "ex3.prob", "--order", "lex"],
    ] {
        let mut args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        args[1] = problem(&args[1]);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (fstable(&args), fstable(&args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), Some(0));
    }
}

#[test]
fn json_round_trips() {
    for cmd in ["check", "closure", "enumerate", "test-ideal", "fpure", "frational", "gb", "dim"] {
        let o = fstable(&[cmd, &problem("ex3.prob"), "--json"]);
        let text = stdout(&o);
        let report = Report::from_json(&text).unwrap();
        assert_eq!(report.command, cmd);
        assert_eq!(report.to_json(), text.trim_end());
        assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
    }
}

#[test]
fn enumerate_carries_the_pool_banner() {
    let text = stdout(&fstable(&["enumerate", &problem("ex2.prob")]));
    assert!(text.contains("pool-relative lower bound"));
    assert!(text.contains("nilpotency: not nilpotent"));
}

#[test]
fn input_errors_exit_one_with_positions() {
    let bad = scratch("bad.prob", "p: 2\nvars: x y\nu: x*q\n");
    let o = fstable(&["check", &bad]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3, column"), "{err}");

    let not_prime = scratch("np.prob", "p: 6\nvars: x\nu: x\n");
    assert_eq!(fstable(&["check", &not_prime]).status.code(), Some(1));
    assert_eq!(fstable(&["nilpotent", &problem("ex2_gorenstein.prob")]).status.code(), Some(1));
    assert_eq!(fstable(&["check", "/no/such/file.prob"]).status.code(), Some(1));
    assert_eq!(fstable(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fstable(&["enumerate", &problem("ex1.prob"), "--pool", "nonsense"]).status.code(), Some(1));
}

#[test]
fn resource_caps_exit_two() {
    let capped = scratch("cap.prob", "p: 2\nvars: x y z\nu: x^3 + y^3 + z^3 + x*y*z\nideal I: x\noption max_iter = 0\n");
    let o = fstable(&["closure", &capped]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("closure"));
    let small = scratch("basis.prob", "p: 2\nvars: x y z\nu: x^3 + y^3 + z^3 + x*y*z\nideal I: x^2 + y*z, x*y + z^2\noption max_basis = 2\n");
    assert_eq!(fstable(&["gb", &small]).status.code(), Some(2));
}

#[test]
fn inconclusive_verdicts_exit_three() {
    let f = scratch("nil.prob", "p: 2\nvars: x y\nu: x^3*y\nideal L: x^2\n");
    let o = fstable(&["nilpotent", &f, "--emax", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("inconclusive"));
    let o = fstable(&["nilpotent", &f, "--emax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nilpotent (e = 2)"));

    let g = scratch("ku.prob", "p: 2\nvars: x y\nu: x*y\nepsilon: x*y\nideal I: x\n");
    let o = fstable(&["check", &g, "--emax", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("C_0"));
    assert_eq!(fstable(&["check", &g]).status.code(), Some(0));
}

#[test]
fn constant_terms_are_flagged() {
    let f = scratch("const.prob", "p: 3\nvars: x y\nu: x*y\nideal I: x + 1\n");
    let text = stdout(&fstable(&["dim", &f]));
    assert!(text.contains("nonzero constant term"), "{text}");
}

#[test]
fn pools_from_files_and_flags() {
    let pool = scratch("pool.txt", "# pool\nx + y\nx, y\n");
    let o = fstable(&["enumerate", &problem("ex1.prob"), "--pool", &format!("file:{pool}")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pool of 3 elements"));
    let o = fstable(&["enumerate", &problem("ex1.prob"), "--pool", "linear"]);
    assert!(stdout(&o).contains("pool of 3 elements (linear forms)"));
}

#[test]
fn reproduce_paper_lists_every_claim() {
    let o = fstable(&["reproduce-paper", "--seed", "11", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert!(r.results.len() >= 20);
    assert!(r.results.iter().all(|e| e.verdict == "PASS" || e.verdict == "FAIL"));
    let failed: Vec<&str> = r.results.iter().filter(|e| e.verdict == "FAIL").map(|e| e.label.as_str()).collect();
    assert_eq!(failed.len(), 1, "{failed:?}");
    assert!(failed[0].contains("as published"));
}
