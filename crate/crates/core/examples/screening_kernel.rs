//! Joint kernels of screening operators on bigraded Fock components,
//! compared with the character of the kernel algebra.
//!
//! ```text
//! cargo run --example screening_kernel
//! ```

use voa_forge::error::Result;
use voa_forge::screening::format_table;
use voa_forge::suite::kernel_character_comparison;

pub fn run_example() -> Result<()> {
    let cmp = kernel_character_comparison(2, &["Qminus", "QFMS"], 3, (-3, 3))?;
    println!("{}", format_table(&cmp.cells));
    println!("matches the character: {}", cmp.pass);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
