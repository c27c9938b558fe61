//! Runs the quick profile of the acceptance suite and prints one line per
//! criterion.
//!
//! ```text
//! cargo run --release --example acceptance_suite
//! ```

use voa_forge::error::Result;
use voa_forge::quantum::DEFAULT_MAX_STEPS;
use voa_forge::report::Verdict;
use voa_forge::suite::{run_suite, Profile};

pub fn run_example() -> Result<()> {
    let report = run_suite(Profile::Quick, DEFAULT_MAX_STEPS);
    for c in &report.criteria {
        let mark = if c.verdict == Verdict::Pass { "PASS" } else { "FAIL" };
        println!("{mark} {:>2} {} ({} ms)", c.id, c.title, c.elapsed_ms);
    }
    println!("overall: {:?}", report.verdict);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
