//! Exact rationals, cyclotomic numbers and truncated q-series.
//!
//! ```text
//! cargo run --example exact_arithmetic
//! ```

use voa_forge::arith::cyclo::Cyclo;
use voa_forge::arith::rat::{int, rat, to_text};
use voa_forge::characters::eta_inv;
use voa_forge::error::Result;

pub fn run_example() -> Result<()> {
    let level = &int(-2) + &rat(1, 2);
    println!("level at p = 2: {}", to_text(&level));

    let q = Cyclo::root_pow(6, 1);
    let q_squared = &q * &q;
    println!("q = e^(pi i/3): q^2 = {}", q_squared.display_with("q"));
    println!("1/(q - q^-1) = {}", (&q - &q.inverse()?).inverse()?.display_with("q"));

    let partitions = eta_inv(&int(10))?;
    let counts: Vec<String> = (0..10)
        .map(|n| to_text(&partitions.coeff(&int(n), &int(0), 0)))
        .collect();
    println!("partition numbers: {}", counts.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
