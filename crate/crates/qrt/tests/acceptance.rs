//! Acceptance criteria: one PASS/FAIL line per criterion, seed 0.

use qrt::par::Exec;
use qrt::suites;
use std::time::Instant;

fn main() {
    let seed = std::env::var("QRT_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let start = Instant::now();
    let mut failed = 0;
    for name in suites::suite_names() {
        let t = Instant::now();
        let report = suites::run_suite(name, seed, Exec::default_mode()).expect("known suite");
        println!("{} ({:.2}s)", report.line(), t.elapsed().as_secs_f64());
        if !report.passed {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed, seed {seed}, {:.1}s",
        suites::SUITES.len() - failed,
        suites::SUITES.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
