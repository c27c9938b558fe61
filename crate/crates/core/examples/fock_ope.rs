//! Vertex operator products in a Fock space: states are parsed from text and
//! their singular OPE is computed exactly.
//!
//! ```text
//! cargo run --example fock_ope
//! ```

use voa_forge::error::Result;
use voa_forge::fock::ope_singular;
use voa_forge::lattice::QuadSpace;
use voa_forge::parse::parse_expr;
use voa_forge::realizations::fms;

pub fn run_example() -> Result<()> {
    let space = QuadSpace::main(2);
    let bg = fms(2)?;
    let beta = parse_expr("e^{u+v}", &space)?;
    let gamma = bg.image("gamma")?.clone();
    println!("beta = {}", beta.pretty());
    println!("gamma = {}", gamma.pretty());
    for (j, pole) in ope_singular(&beta, &gamma, 4)?.iter().enumerate() {
        if !pole.is_zero() {
            println!("beta(z) gamma(w) ~ {} / (z-w)^{}", pole.pretty(), j + 1);
        }
    }
    let u = parse_expr("u[-1]", &space)?;
    let poles = ope_singular(&u, &u, 3)?;
    println!("u(z) u(w) ~ {} / (z-w)^2", poles[1].pretty());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
