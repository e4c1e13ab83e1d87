//! Run every numbered identity suite programmatically, the way
//! `whitney verify --theorem all` does, plus the operator-algebra
//! inversion report.
//!
//! Run with: cargo run --example identity_suites

use whitney::boson::verify_inversion_identities;
use whitney::cli::suites::{run_all, SuiteOptions};
use whitney::exact::rat;

fn main() {
    let opts = SuiteOptions {
        nmax: 8,
        m: 2,
        r: rat(1),
    };
    println!("identity suites at nmax=8, m=2, r=1:");
    let mut all = true;
    for report in run_all(&opts) {
        let verdict = if report.all_passed() { "pass" } else { "FAIL" };
        println!("  suite {:>2}: {verdict}", report.id);
        if let Some(c) = report.first_failure() {
            println!(
                "    {} — {}",
                c.label,
                c.counterexample.as_deref().unwrap_or("no counterexample")
            );
            all = false;
        }
    }

    println!("\noperator-algebra inversion report (nmax=5):");
    let report = verify_inversion_identities(5);
    for check in &report.checks {
        let verdict = if check.passed { "pass" } else { "FAIL" };
        println!("  {:<34} {verdict}", check.name);
        all &= check.passed;
    }

    println!("\noverall: {}", if all { "PASS" } else { "FAIL" });
    std::process::exit(if all { 0 } else { 1 });
}
