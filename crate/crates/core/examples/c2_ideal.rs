//! Groebner bases in the C2 algebra: the nilpotent family generates the
//! monomial ideal and the Casimir is nilpotent modulo it.
//!
//! ```text
//! cargo run --example c2_ideal
//! ```

use voa_forge::c2::{casimir_check, ideal_equality, nilpotency_suite};
use voa_forge::error::Result;

pub fn run_example() -> Result<()> {
    for p in 1..=2 {
        let ideal = ideal_equality(p);
        println!(
            "p = {p}: reduced basis {:?}, equal to I: {}",
            ideal.family_basis, ideal.pass
        );
        let casimir = casimir_check(p);
        println!(
            "  Casimir image {}, least nilpotent power {:?}",
            casimir.image, casimir.least_power
        );
        let nilpotent = nilpotency_suite(p)?;
        println!(
            "  f-adjoint nilpotency: {}/{} pass",
            nilpotent.iter().filter(|r| r.pass).count(),
            nilpotent.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
