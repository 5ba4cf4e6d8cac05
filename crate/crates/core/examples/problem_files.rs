//! Driving the command-line front end from code.
//!
//! `cargo run --example problem_files` runs a few subcommands on the files in
//! `examples/problems/`, first as text and then as JSON.

use fstable::cli::{run_with, Report};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/problems");
    for (cmd, file) in [("check", "ex2.prob"), ("test-ideal", "ex1.prob"), ("dim", "remark.prob")] {
        let path = format!("{dir}/{file}");
        let mut out = Vec::new();
        let code = run_with(["fstable", cmd, &path], &mut out, &mut std::io::stderr());
        print!("{}", String::from_utf8_lossy(&out));
        println!("(exit {code})\n");
    }

    let mut out = Vec::new();
    let path = format!("{dir}/ex3.prob");
    let code = run_with(["fstable", "enumerate", "--json", &path], &mut out, &mut std::io::stderr());
    let report = Report::from_json(std::str::from_utf8(&out).unwrap()).expect("valid JSON");
    println!("enumerate ex3.prob --json: exit {code}, {} members", report.results.len());
    for e in &report.results {
        println!("  {} [{}] ({})", e.label, e.height.as_deref().unwrap_or("-"), e.basis.as_ref().unwrap().join(", "));
    }
}
