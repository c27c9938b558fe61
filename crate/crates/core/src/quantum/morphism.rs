//! Algebra maps between presentations and their verification by
//! rewriting every relator to zero.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::expr::NCExpr;
use super::presentation::{Presentation, Variant};
use crate::arith::cyclo::Cyclo;
use crate::error::{Error, Result};
pub use crate::report::Verdict;

/// An algebra map given by the images of all source generators.
#[derive(Clone, Debug)]
pub struct Morphism {
    name: String,
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: Vec<NCExpr>,
}

impl Morphism {
    /// A map defined by `(source generator, image)` pairs covering every
    /// source generator.
    pub fn new(
        name: &str,
        source: Arc<Presentation>,
        target: Arc<Presentation>,
        assignments: Vec<(&str, NCExpr)>,
    ) -> Result<Self> {
        let mut images: Vec<Option<NCExpr>> = vec![None; source.names().len()];
        for (gen, image) in assignments {
            images[source.letter(gen)? as usize] = Some(image);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| Error::Precondition(format!("no image for {}", source.names()[i]))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism {
            name: name.to_string(),
            source,
            target,
            images,
        })
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Source presentation.
    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    /// Target presentation.
    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    /// Image of a source expression, unreduced.
    pub fn apply(&self, e: &NCExpr) -> NCExpr {
        e.substitute(&self.images, self.target.order())
    }

    /// Image of the source generator with the given letter.
    pub fn image(&self, letter: u8) -> &NCExpr {
        &self.images[letter as usize]
    }
}

/// Outcome of one relator under a map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    /// Relation label in the source.
    pub relation: String,
    /// Verdict.
    pub verdict: Verdict,
    /// Reduced image of the relator, rendered.
    pub residual: String,
    /// Rule applications used.
    pub steps: usize,
}

/// Outcome of [`check_morphism`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    /// Map name.
    pub map: String,
    /// Source variant and `p`.
    pub source: String,
    /// Target variant and `p`.
    pub target: String,
    /// Per-relation outcomes in the source's relation order.
    pub relations: Vec<RelationCheck>,
    /// Combined verdict.
    pub verdict: Verdict,
}

fn tag(p: &Presentation) -> String {
    format!("{} (p = {})", p.variant(), p.p())
}

/// Sends every defining relator of the source through `map` and reduces it
/// in the target.
pub fn check_morphism(map: &Morphism, max_steps: usize) -> MorphismReport {
    let relations: Vec<RelationCheck> = map
        .source
        .relations()
        .par_iter()
        .map(|r| {
            let red = map.target.reduce(&map.apply(&r.expr), max_steps);
            RelationCheck {
                relation: r.label.clone(),
                verdict: Verdict::of_residual(red.normal.is_zero(), red.complete),
                residual: map.target.render(&red.normal),
                steps: red.steps,
            }
        })
        .collect();
    MorphismReport {
        map: map.name.clone(),
        source: tag(&map.source),
        target: tag(&map.target),
        verdict: Verdict::combine(relations.iter().map(|r| r.verdict)),
        relations,
    }
}

/// Outcome of one round trip on a generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    /// The composite, e.g. `G∘F`.
    pub composite: String,
    /// Generator name.
    pub generator: String,
    /// Verdict.
    pub verdict: Verdict,
    /// Reduced composite image, rendered.
    pub image: String,
}

/// Outcome of [`check_inverse`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseReport {
    /// Per-generator outcomes, `G∘F` first.
    pub round_trips: Vec<RoundTrip>,
    /// Combined verdict.
    pub verdict: Verdict,
}

/// Checks `g(f(x)) = x` on the generators of the source of `f` and
/// `f(g(y)) = y` on the generators of the source of `g`.
pub fn check_inverse(f: &Morphism, g: &Morphism, max_steps: usize) -> Result<InverseReport> {
    if f.source.variant() != g.target.variant() || f.target.variant() != g.source.variant() {
        return Err(Error::Precondition(format!(
            "{} and {} are not composable both ways",
            f.name, g.name
        )));
    }
    let mut round_trips = Vec::new();
    for (first, second) in [(f, g), (g, f)] {
        let home = &first.source;
        let composite = format!("{}∘{}", second.name, first.name);
        let trips: Vec<RoundTrip> = (0..home.names().len() as u8)
            .into_par_iter()
            .map(|l| {
                let image = second.apply(&first.target.reduce(first.image(l), max_steps).normal);
                let red = home.reduce(&image, max_steps);
                let diff = red.normal.sub(&home.word(&[l]));
                RoundTrip {
                    composite: composite.clone(),
                    generator: home.names()[l as usize].clone(),
                    verdict: Verdict::of_residual(diff.is_zero(), red.complete),
                    image: home.render(&red.normal),
                }
            })
            .collect();
        round_trips.extend(trips);
    }
    Ok(InverseReport {
        verdict: Verdict::combine(round_trips.iter().map(|r| r.verdict)),
        round_trips,
    })
}

fn q_minus_inverse(pres: &Presentation) -> Cyclo {
    (&pres.q(1) - &pres.q(-1)).inverse().expect("q² ≠ 1")
}

fn cartan_assignments(t: &Presentation) -> Result<Vec<(&'static str, NCExpr)>> {
    let neg = Cyclo::from_int(t.order(), -1);
    Ok(vec![
        ("K0", t.named(&["K0"])?),
        ("K1", t.named(&["K1", "K2"])?),
        ("K1^-1", t.named(&["K1^-1", "K2^-1"])?),
        ("K2", t.named(&["K2^-1"])?),
        ("K2^-1", t.named(&["K2"])?),
        ("H1", t.named(&["H1"])?.add(&t.named(&["H2"])?)),
        ("H2", t.named(&["H2"])?.scale(&neg)),
    ])
}

fn require_p3(p: u32) -> Result<()> {
    if p < 3 {
        return Err(Error::Precondition(format!("the maps F and G need p ≥ 3, got {p}")));
    }
    Ok(())
}

/// `F: 𝒰^a → 𝒰^s`.
pub fn f_map(p: u32) -> Result<Morphism> {
    require_p3(p)?;
    let src = Arc::new(Presentation::build(Variant::A, p)?);
    let t = Arc::new(Presentation::build(Variant::S, p)?);
    let neg = Cyclo::from_int(t.order(), -1);
    let mut images = cartan_assignments(&t)?;
    images.push((
        "x1",
        t.named(&["x1*", "x2*"])?
            .add(&t.named(&["x2*", "x1*"])?.scale(&t.q(-1))),
    ));
    images.push((
        "x1*",
        t.named(&["x1", "x2"])?
            .add(&t.named(&["x2", "x1"])?.scale(&t.q(-1)))
            .scale(&(&neg * &q_minus_inverse(&t))),
    ));
    images.push(("x2", t.named(&["x2"])?));
    images.push(("x2*", t.named(&["K2^-1", "K2^-1", "x2*"])?.scale(&neg)));
    Morphism::new("F", src, t, images)
}

/// `G: 𝒰^s → 𝒰^a`.
pub fn g_map(p: u32) -> Result<Morphism> {
    require_p3(p)?;
    let src = Arc::new(Presentation::build(Variant::S, p)?);
    let t = Arc::new(Presentation::build(Variant::A, p)?);
    let neg = Cyclo::from_int(t.order(), -1);
    let mut images = cartan_assignments(&t)?;
    images.push((
        "x1",
        t.named(&["x2*", "x1*"])?.sub(&t.named(&["x1*", "x2*"])?.scale(&t.q(1))),
    ));
    images.push((
        "x1*",
        t.named(&["x2", "x1"])?
            .sub(&t.named(&["x1", "x2"])?.scale(&t.q(1)))
            .scale(&(&neg * &q_minus_inverse(&t))),
    ));
    images.push(("x2", t.named(&["x2"])?));
    images.push(("x2*", t.named(&["K2^-1", "K2^-1", "x2*"])?.scale(&neg)));
    Morphism::new("G", src, t, images)
}

/// The map `u_q^H(sl(2|1)) → 𝒰^a`: `Eᵢ ↦ xᵢKᵢ⁻¹`, `F₁ ↦ x₁*/(q−q⁻¹)`,
/// `F₂ ↦ −x₂*/(q−q⁻¹)`, identity on the Cartan part.
pub fn uqh_to_a(p: u32) -> Result<Morphism> {
    let target = Presentation::build(Variant::A, p)?;
    uqh_to_target(p, Arc::new(target))
}

/// The same assignments into an arbitrary presentation with the generator
/// names of `𝒰^a`, such as one with a corrupted linking constant.
pub fn uqh_to_target(p: u32, t: Arc<Presentation>) -> Result<Morphism> {
    let src = Arc::new(Presentation::build(Variant::Uqh, p)?);
    if src.variant() != Variant::Uqh {
        return Err(Error::Precondition("u_q^H needs p ≥ 2 for this map".into()));
    }
    let inv = q_minus_inverse(&t);
    let neg = Cyclo::from_int(t.order(), -1);
    let images = vec![
        ("E1", t.named(&["x1", "K1^-1"])?),
        ("E2", t.named(&["x2", "K2^-1"])?),
        ("F1", t.named(&["x1*"])?.scale(&inv)),
        ("F2", t.named(&["x2*"])?.scale(&(&neg * &inv))),
        ("H1", t.named(&["H1"])?),
        ("H2", t.named(&["H2"])?),
        ("K1", t.named(&["K1"])?),
        ("K1^-1", t.named(&["K1^-1"])?),
        ("K2", t.named(&["K2"])?),
        ("K2^-1", t.named(&["K2^-1"])?),
    ];
    Morphism::new("uqh->a", src, t, images)
}
