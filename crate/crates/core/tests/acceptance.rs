//! Runs the ten acceptance criteria at zero tolerance and prints one
//! PASS/FAIL line per criterion, followed by the failing checks.

use std::process::ExitCode;

use voa_forge::quantum::DEFAULT_MAX_STEPS;
use voa_forge::report::Verdict;
use voa_forge::suite::{run_criterion, Profile, CRITERIA};

fn main() -> ExitCode {
    let mut all_pass = true;
    for &(id, _, _) in &CRITERIA {
        let report = run_criterion(id, Profile::Full, DEFAULT_MAX_STEPS).expect("valid criterion id");
        let pass = report.verdict == Verdict::Pass && report.within_limit();
        all_pass &= pass;
        println!(
            "{} criterion {:>2}: {} ({} checks, {} ms, limit {} s)",
            if pass { "PASS" } else { "FAIL" },
            id,
            report.title,
            report.checks.len(),
            report.elapsed_ms,
            report.limit_seconds
        );
        for check in report.checks.iter().filter(|c| c.verdict != Verdict::Pass) {
            println!("    {:?} {}: {}", check.verdict, check.label, check.detail);
        }
        if !report.within_limit() {
            println!("    runtime bound exceeded");
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
