//! Presentations of quantum supergroups at a root of unity, bounded
//! rewriting and the isomorphisms between them.
//!
//! ```text
//! cargo run --example quantum_relations
//! ```

use voa_forge::error::Result;
use voa_forge::quantum::{fg_report, Presentation, Variant, DEFAULT_MAX_STEPS};

pub fn run_example() -> Result<()> {
    let pres = Presentation::build(Variant::A, 3)?;
    println!("generators: {}", pres.names().join(" "));
    println!("defining relations: {}", pres.relations().len());
    for word in [["x1*", "x1"].as_slice(), &["K1", "x1", "K1^-1"], &["x2", "x2"]] {
        let reduced = pres.reduce(&pres.named(word)?, DEFAULT_MAX_STEPS);
        println!("{} -> {}", word.join(" "), pres.render(&reduced.normal));
    }
    let report = fg_report(3, DEFAULT_MAX_STEPS)?;
    println!(
        "F preserves {} relations, G preserves {}, round trips: {:?}",
        report.f.relations.len(),
        report.g.relations.len(),
        report.inverse.verdict
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
