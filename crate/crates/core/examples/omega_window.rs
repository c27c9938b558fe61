//! The sl2 action on a window of the lowest-weight space and the
//! classification of its decomposition.
//!
//! ```text
//! cargo run --example omega_window
//! ```

use voa_forge::arith::rat::{int, rat};
use voa_forge::error::Result;
use voa_forge::lattice::a_rs;
use voa_forge::window::OmegaWindow;

pub fn run_example() -> Result<()> {
    let cases = [
        (2, 1, 1, int(0)),
        (2, 1, 1, rat(1, 7)),
        (2, 2, 1, -a_rs(2, 2, 1)),
        (3, 3, 2, -a_rs(3, 3, 2)),
    ];
    for (p, r, s, b) in cases {
        let w = OmegaWindow::new(p, r, s, b, -4, 4)?;
        let split = w.split_points();
        println!(
            "p={p} r={r} s={s}: brackets {}, class {}, {}",
            if w.bracket_check().pass { "hold" } else { "fail" },
            split.class.label(),
            split.structure
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
