//! Truncated characters and the identities between them.
//!
//! ```text
//! cargo run --example character_identities
//! ```

use voa_forge::arith::rat::int;
use voa_forge::characters::{character, decomposition_check, p1_decomposition_check, weyl_simple_check, CharKind};
use voa_forge::error::Result;

pub fn run_example() -> Result<()> {
    let order = int(3);
    let window = (-3, 3);
    let weyl = character(&CharKind::Weyl { p: 2, n: 0 }, &order, window)?;
    println!("Weyl module, p = 2, n = 0:\n  {}", weyl.pretty());
    let simple = weyl_simple_check(2, 1, &order, window)?;
    println!("Weyl module n = 1 is simple: {}", simple.pass);
    let decomposition = decomposition_check(2, 1, 1, &order, window)?;
    println!("lattice module decomposition (2,1,1): {}", decomposition.pass);
    let p1 = p1_decomposition_check(&order, (-6, 6))?;
    println!(
        "p = 1 decomposition over {} coefficients: {}",
        p1.terms_compared, p1.pass
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
