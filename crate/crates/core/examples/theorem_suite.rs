//! Runs the full T1..T21 theorem-verification suite and prints a summary.
//!
//! Every check instantiates one closed formula, bound, or construction on
//! the default instance families and compares it against the certified
//! exact solvers. Skips always carry a reason; a vacuous check (no passing
//! instance) counts as a suite failure.

use corona_lab::harness::{run_suite, SuiteConfig};

fn main() {
    let config = SuiteConfig {
        seed: 7,
        jobs: 4,
        ..SuiteConfig::default()
    };
    let started = std::time::Instant::now();
    let report = run_suite(&config);
    for c in &report.checks {
        println!(
            "{:4} {:60} pass {:3}  fail {:2}  skip {:3}",
            c.id,
            &c.anchor[..c.anchor.len().min(60)],
            c.pass,
            c.fail,
            c.skip
        );
    }
    println!(
        "\nsuite {} in {:?} (seed {})",
        if report.is_clean() { "CLEAN" } else { "NOT CLEAN" },
        started.elapsed(),
        report.suite.seed
    );
}
