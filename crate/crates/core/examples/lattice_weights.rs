//! Quadratic spaces, named weights and conformal weights of lattice modules.
//!
//! ```text
//! cargo run --example lattice_weights
//! ```

use voa_forge::arith::rat::to_text;
use voa_forge::error::Result;
use voa_forge::lattice::{delta_rs, format_vector, named_weight, NamedWeight, QuadSpace};

pub fn run_example() -> Result<()> {
    let p = 3;
    let space = QuadSpace::main(p);
    println!("generators of the main space: {:?}", space.names());
    let alpha = named_weight(NamedWeight::AlphaRS, p, 2, 1)?;
    println!("alpha_(2,1) = {}", format_vector(&space, alpha.coeffs()));
    println!("(alpha_(2,1), alpha_(2,1)) = {}", to_text(&alpha.pair(&alpha)?));
    for s in 1..=3 {
        println!("Delta_(1,{s}) at p = {p}: {}", to_text(&delta_rs(p as i64, 1, s)));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
