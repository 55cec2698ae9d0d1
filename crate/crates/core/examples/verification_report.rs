//! Runs the verification suites and prints the JSON report.

use infgon::{run_suite, Suite, VerifyOptions};

fn main() {
    let report = run_suite(Suite::All, &VerifyOptions { cases: 20, ..VerifyOptions::default() });
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    std::process::exit(i32::from(!report.passed));
}
