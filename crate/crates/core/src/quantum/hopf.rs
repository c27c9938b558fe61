//! Coproducts of `𝒰^a`, `𝒰^s` on generators and the twisted compatibility
//! `Δ(F(v))·Φ = Φ·(F⊗F)(Δ(v))` with `Φ = 1⊗1 − K₀K₂⁻¹x₂*⊗x₂`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::expr::{NCExpr, Word};
use super::morphism::{Morphism, Verdict};
use super::presentation::{Presentation, CARTAN_H, LOWERING, RAISING};
use crate::arith::cyclo::Cyclo;
use crate::error::{Error, Result};

/// An element of `U ⊗ U` as a sum of word pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorExpr {
    order: u32,
    terms: BTreeMap<(Word, Word), Cyclo>,
}

impl TensorExpr {
    /// Zero.
    pub fn zero(order: u32) -> Self {
        TensorExpr {
            order,
            terms: BTreeMap::new(),
        }
    }

    /// `a ⊗ b`.
    pub fn pure(a: &NCExpr, b: &NCExpr) -> Self {
        let mut out = Self::zero(a.order());
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                out.add_term(u.clone(), v.clone(), x * y);
            }
        }
        out
    }

    /// `1 ⊗ 1`.
    pub fn one(order: u32) -> Self {
        Self::pure(&NCExpr::one(order), &NCExpr::one(order))
    }

    fn add_term(&mut self, u: Word, v: Word, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        let key = (u, v);
        let s = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    /// `true` for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), -c);
        }
        out
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order);
        for ((u1, v1), a) in &self.terms {
            for ((u2, v2), b) in &other.terms {
                out.add_term(u1.concat(u2), v1.concat(v2), a * b);
            }
        }
        out
    }

    /// Applies algebra maps to each factor.
    pub fn map(&self, left: &Morphism, right: &Morphism) -> Self {
        let mut out = Self::zero(left.target().order());
        for ((u, v), c) in &self.terms {
            let a = left.apply(&NCExpr::word(self.order, u.clone(), c.clone()));
            let b = right.apply(&NCExpr::word(self.order, v.clone(), Cyclo::one(self.order)));
            out = out.add(&Self::pure(&a, &b));
        }
        out
    }

    /// Reduces both factors in `pres`; the flag is `false` on budget
    /// exhaustion.
    pub fn reduce(&self, pres: &Presentation, max_steps: usize) -> (Self, bool) {
        let mut out = Self::zero(self.order);
        let mut complete = true;
        for ((u, v), c) in &self.terms {
            let a = pres.reduce(&NCExpr::word(self.order, u.clone(), c.clone()), max_steps);
            let b = pres.reduce(&NCExpr::word(self.order, v.clone(), Cyclo::one(self.order)), max_steps);
            complete &= a.complete && b.complete;
            out = out.add(&Self::pure(&a.normal, &b.normal));
        }
        (out, complete)
    }

    /// Renders the element with the generator names of `pres`.
    pub fn render(&self, pres: &Presentation) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let word = |w: &Word| pres.render(&NCExpr::word(self.order, w.clone(), Cyclo::one(self.order)));
        self.terms
            .iter()
            .map(|((u, v), c)| format!("({})*{} (x) {}", c.display_with("q"), word(u), word(v)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The coproduct of a single letter of `𝒰^a` or `𝒰^s`.
pub fn coproduct_letter(pres: &Presentation, l: u8) -> Result<TensorExpr> {
    let k0 = pres
        .k0()
        .ok_or_else(|| Error::Precondition("coproduct data is carried by variants a and s".into()))?;
    let one = NCExpr::one(pres.order());
    let x = pres.word(&[l]);
    if RAISING.contains(&l) || LOWERING.contains(&l) {
        let i = (l % 2) as usize;
        let mut group = pres.word(&[pres.k()[i]]);
        if pres.parity()[i] == 1 {
            group = pres.word(&[k0]).mul(&group);
        }
        return Ok(TensorExpr::pure(&group, &x).add(&TensorExpr::pure(&x, &one)));
    }
    if CARTAN_H.contains(&l) {
        return Ok(TensorExpr::pure(&x, &one).add(&TensorExpr::pure(&one, &x)));
    }
    Ok(TensorExpr::pure(&x, &x))
}

/// The coproduct of an expression, extended multiplicatively.
pub fn coproduct(pres: &Presentation, e: &NCExpr) -> Result<TensorExpr> {
    let mut out = TensorExpr::zero(pres.order());
    for (w, c) in e.terms() {
        let mut acc = TensorExpr::pure(&NCExpr::scalar(c.clone()), &NCExpr::one(pres.order()));
        for &l in &w.0 {
            acc = acc.mul(&coproduct_letter(pres, l)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Outcome of the twisted compatibility on one generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistCheck {
    /// Generator of the source.
    pub generator: String,
    /// Verdict.
    pub verdict: Verdict,
    /// `Δ(F(v))·Φ − Φ·(F⊗F)(Δ(v))` after reduction, rendered.
    pub residual: String,
}

/// Outcome of [`twisted_coproduct_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistReport {
    /// Per-generator outcomes.
    pub generators: Vec<TwistCheck>,
    /// Combined verdict.
    pub verdict: Verdict,
}

/// Compares `Δ^s(F(v))·Φ` with `Φ·(F⊗F)(Δ^a(v))` for every generator `v`
/// of the source of `f`.
pub fn twisted_coproduct_check(f: &Morphism, max_steps: usize) -> Result<TwistReport> {
    let src = f.source();
    let t = f.target();
    let twist = TensorExpr::one(t.order()).sub(&TensorExpr::pure(
        &t.named(&["K0", "K2^-1", "x2*"])?,
        &t.named(&["x2"])?,
    ));
    let mut generators = Vec::new();
    for l in 0..src.names().len() as u8 {
        let v = src.word(&[l]);
        let lhs = coproduct(t, &f.apply(&v))?.mul(&twist);
        let rhs = twist.mul(&coproduct(src, &v)?.map(f, f));
        let (diff, complete) = lhs.sub(&rhs).reduce(t, max_steps);
        generators.push(TwistCheck {
            generator: src.names()[l as usize].clone(),
            verdict: Verdict::of_residual(diff.is_zero(), complete),
            residual: diff.render(t),
        });
    }
    Ok(TwistReport {
        verdict: Verdict::combine(generators.iter().map(|g| g.verdict)),
        generators,
    })
}
