//! Builds the Wakimoto realization of sl2 at level -2 + 1/p and verifies its
//! OPE table against the affine algebra.
//!
//! ```text
//! cargo run --example wakimoto_realization
//! ```

use voa_forge::error::Result;
use voa_forge::realizations::{verify_embedding, wakimoto};

pub fn run_example() -> Result<()> {
    for p in 1..=3 {
        let w = wakimoto(p)?;
        let report = verify_embedding(&w)?;
        println!(
            "p = {p}: {} OPE entries, level {}, central charge {}, {}",
            report.entries.len(),
            report.level.as_deref().unwrap_or("-"),
            report.central_charge.as_deref().unwrap_or("-"),
            if report.pass { "verified" } else { "MISMATCH" }
        );
    }
    let w = wakimoto(2)?;
    for (label, state) in &w.images {
        println!("  {label} = {}", state.pretty());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
