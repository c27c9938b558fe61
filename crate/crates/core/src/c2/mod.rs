//! The C₂ Poisson algebra of the Wakimoto realization: the image of
//! `S(sl₂)` in `ℚ[α, β, γ]`, the ideal generated by the nilpotent family and
//! derivation nilpotency.
//!
//! The variable `alpha` stands for the rescaled Heisenberg class `α/√p`, so
//! every map has rational coefficients; the unscaled `α²` is `p·alpha²`.

pub mod groebner;
pub mod poly;

use std::sync::Arc;

use serde::Serialize;

use crate::arith::rat::int;
use crate::error::{Error, Result};
use groebner::{groebner, ideal_member, is_groebner};
use poly::{Mono, Poly, PolyRing};

/// `S(sl₂) = ℚ[h, e, f]`, ordered `h > e > f`.
pub fn sl2_ring() -> Arc<PolyRing> {
    PolyRing::new(&["h", "e", "f"])
}

/// The free-field ring `ℚ[alpha, beta, gamma]`, ordered `alpha > beta > gamma`.
pub fn free_field_ring() -> Arc<PolyRing> {
    PolyRing::new(&["alpha", "beta", "gamma"])
}

fn var(ring: &Arc<PolyRing>, name: &str) -> Poly {
    Poly::var(ring, name).expect("known variable")
}

/// Images of `h, e, f`: `−2βγ − alpha`, `β`, `−βγ² − γ·alpha`.
pub fn c2_images() -> Vec<Poly> {
    let r = free_field_ring();
    let (a, b, g) = (var(&r, "alpha"), var(&r, "beta"), var(&r, "gamma"));
    let h = b.mul(&g).scale(&int(-2)).sub(&a);
    let f = b.mul(&g).mul(&g).scale(&int(-1)).sub(&g.mul(&a));
    vec![h, b, f]
}

/// The homomorphism `S(sl₂) → ℚ[alpha, β, γ]`.
pub fn c2_map(f: &Poly) -> Poly {
    f.substitute(&free_field_ring(), &c2_images())
}

/// The Casimir `h² + 4ef`.
pub fn casimir() -> Poly {
    let r = sl2_ring();
    let (h, e, f) = (var(&r, "h"), var(&r, "e"), var(&r, "f"));
    h.mul(&h).add(&e.mul(&f).scale(&int(4)))
}

/// `x₀₁, x₁₁, x₂₁` with the scalar `ε` set to one:
/// `e·alpha^{2p−1}`, `−h·alpha^{2p−1}`, `−2f·alpha^{2p−1}` under [`c2_map`].
pub fn x_i1(p: u32) -> [Poly; 3] {
    let r = free_field_ring();
    let [h, e, f]: [Poly; 3] = c2_images().try_into().expect("three images");
    let power = var(&r, "alpha").pow(2 * p - 1);
    [
        e.mul(&power),
        h.mul(&power).scale(&int(-1)),
        f.mul(&power).scale(&int(-2)),
    ]
}

/// `x₀₁², x₀₁x₁₁, x₁₁² + x₀₁x₂₁, x₁₁x₂₁, x₂₁²`.
pub fn nilpotent_family(p: u32) -> Vec<Poly> {
    let [x0, x1, x2] = x_i1(p);
    vec![
        x0.mul(&x0),
        x0.mul(&x1),
        x1.mul(&x1).add(&x0.mul(&x2)),
        x1.mul(&x2),
        x2.mul(&x2),
    ]
}

/// `I = (alpha^{4p}, alpha^{4p−1}β, alpha^{4p−2}β²)`.
pub fn target_ideal(p: u32) -> Vec<Poly> {
    let r = free_field_ring();
    let a = 4 * p;
    [(a, 0), (a - 1, 1), (a - 2, 2)]
        .into_iter()
        .map(|(i, j)| Poly::term(&r, int(1), Mono(vec![i, j, 0])))
        .collect()
}

/// Outcome of the ideal-equality check.
#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    /// Parameter `p`.
    pub p: u32,
    /// Reduced Gröbner basis of the nilpotent family.
    pub family_basis: Vec<String>,
    /// Reduced Gröbner basis of `I`.
    pub target_basis: Vec<String>,
    /// Every family member lies in `I`.
    pub family_in_target: bool,
    /// Every generator of `I` lies in the family ideal.
    pub target_in_family: bool,
    /// The Buchberger criterion holds for the computed basis.
    pub criterion_holds: bool,
    /// `true` iff the two ideals coincide.
    pub pass: bool,
}

/// Checks `⟨nilpotent family⟩ = I` by two-sided membership.
pub fn ideal_equality(p: u32) -> IdealReport {
    let family = nilpotent_family(p);
    let target = target_ideal(p);
    let gf = groebner(&family);
    let gt = groebner(&target);
    let family_in_target = family.iter().all(|f| ideal_member(f, &gt));
    let target_in_family = target.iter().all(|f| ideal_member(f, &gf));
    let criterion_holds = is_groebner(&gf);
    IdealReport {
        p,
        family_basis: gf.iter().map(Poly::to_string).collect(),
        target_basis: gt.iter().map(Poly::to_string).collect(),
        family_in_target,
        target_in_family,
        criterion_holds,
        pass: family_in_target && target_in_family && criterion_holds && gf == gt,
    }
}

/// Outcome of the Casimir checks.
#[derive(Clone, Debug, Serialize)]
pub struct CasimirReport {
    /// Parameter `p`.
    pub p: u32,
    /// The image of `h² + 4ef`.
    pub image: String,
    /// `p · c2_map(Ω)` equals the square of the unscaled `α = √p·alpha`.
    pub alpha_squared: bool,
    /// `c2_map(Ω)` itself lies outside the family ideal.
    pub casimir_outside: bool,
    /// Least `m` with `c2_map(Ω)^m` in the family ideal.
    pub least_power: Option<u32>,
    /// `true` iff all of the above hold.
    pub pass: bool,
}

/// Checks `α² = pΩ`, that `Ω` itself is not in the family ideal and finds
/// the least power of `Ω` that is.
pub fn casimir_check(p: u32) -> CasimirReport {
    let r = free_field_ring();
    let image = c2_map(&casimir());
    let alpha_sq = var(&r, "alpha").pow(2).scale(&int(p as i64));
    let alpha_squared = image.scale(&int(p as i64)) == alpha_sq;
    let basis = groebner(&nilpotent_family(p));
    let casimir_outside = !ideal_member(&image, &basis);
    let least_power = (1..=4 * p).find(|m| ideal_member(&image.pow(*m), &basis));
    CasimirReport {
        p,
        image: image.to_string(),
        alpha_squared,
        casimir_outside,
        least_power,
        pass: alpha_squared && casimir_outside && least_power.is_some(),
    }
}

/// A derivation of a polynomial ring, given by its values on the variables.
#[derive(Clone, Debug)]
pub struct Derivation {
    images: Vec<Poly>,
}

impl Derivation {
    /// `D(xᵢ) = images[i]`.
    pub fn new(images: Vec<Poly>) -> Self {
        Derivation { images }
    }

    /// The Poisson-adjoint derivation `{f, ·}` for the bracket table
    /// `{xᵢ, xⱼ} = table[i][j]`.
    pub fn poisson_adjoint(f: &Poly, table: &[Vec<Poly>]) -> Self {
        let n = f.ring().len();
        let images = (0..n)
            .map(|j| {
                (0..n).fold(Poly::zero(f.ring()), |acc, i| {
                    acc.add(&f.derivative(i).mul(&table[i][j]))
                })
            })
            .collect();
        Derivation { images }
    }

    /// `D(g) = Σ ∂ᵢg · D(xᵢ)`.
    pub fn apply(&self, g: &Poly) -> Poly {
        self.images
            .iter()
            .enumerate()
            .fold(Poly::zero(g.ring()), |acc, (i, d)| acc.add(&g.derivative(i).mul(d)))
    }
}

/// The free-field bracket `{β, γ} = 1` with `alpha` central.
pub fn free_field_bracket() -> Vec<Vec<Poly>> {
    let r = free_field_ring();
    let mut table = vec![vec![Poly::zero(&r); 3]; 3];
    table[1][2] = Poly::one(&r);
    table[2][1] = Poly::constant(&r, int(-1));
    table
}

/// The derivation `{c2_map(f), ·}`.
pub fn f_adjoint() -> Derivation {
    Derivation::poisson_adjoint(&c2_images()[2], &free_field_bracket())
}

/// Outcome of a derivation nilpotency check.
#[derive(Clone, Debug, Serialize)]
pub struct NilpotencyReport {
    /// The element `a`.
    pub element: String,
    /// Exponent `N` with `a^N` in the ideal.
    pub exponent: u32,
    /// `(Da)^{N²}` lies in the ideal.
    pub pass: bool,
}

/// Given `a^N ∈ ideal` and `D(ideal) ⊆ ideal`, checks `(Da)^{N²} ∈ ideal`.
pub fn derivation_nilpotency(ideal: &[Poly], d: &Derivation, a: &Poly, n: u32) -> Result<NilpotencyReport> {
    let basis = groebner(ideal);
    if let Some(g) = ideal.iter().find(|g| !ideal_member(&d.apply(g), &basis)) {
        return Err(Error::Precondition(format!(
            "derivation does not preserve the ideal: D({g}) is outside"
        )));
    }
    if !ideal_member(&a.pow(n), &basis) {
        return Err(Error::Precondition(format!("({a})^{n} is not in the ideal")));
    }
    let da = d.apply(a);
    Ok(NilpotencyReport {
        element: a.to_string(),
        exponent: n,
        pass: ideal_member(&da.pow(n * n), &basis),
    })
}

/// Nilpotency of `{f, ·}` applied to the family members (`N = 1`) and to
/// `x₀₁, x₁₁, x₂₁` (`N = 2`) modulo `I`.
pub fn nilpotency_suite(p: u32) -> Result<Vec<NilpotencyReport>> {
    let ideal = target_ideal(p);
    let d = f_adjoint();
    let mut out = Vec::new();
    for a in nilpotent_family(p) {
        out.push(derivation_nilpotency(&ideal, &d, &a, 1)?);
    }
    for a in x_i1(p) {
        out.push(derivation_nilpotency(&ideal, &d, &a, 2)?);
    }
    Ok(out)
}
