//! Structural checks: the super Serre expansion, braiding and Cartan data,
//! the degenerate `p = 2` relation and agreement of rewriting strategies.

use serde::Serialize;

use super::expr::{NCExpr, Word};
use super::morphism::Verdict;
use super::nichols::complete;
use super::presentation::{Presentation, Variant, LOWERING, RAISING};
use super::rewrite::{RewriteSystem, Strategy};
use crate::arith::cyclo::Cyclo;
use crate::arith::rat::{int, rat, to_i64, Rat};
use crate::error::Result;
use crate::lattice::{QuadSpace, WeightVector};

/// Outcome of [`expand_super_serre`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperSerreReport {
    /// The parameter `p`.
    pub p: u32,
    /// Convention for the squares of the generators.
    pub convention: String,
    /// `(e₁e₂ + q⁻¹e₂e₁)^p` reduced.
    pub lhs: String,
    /// `(e₁e₂)^p − (e₂e₁)^p` reduced.
    pub rhs: String,
    /// `true` iff both sides agree with `eᵢ² = 0`.
    pub pass: bool,
    /// Whether the identity would survive with `eᵢ² = 1` instead.
    pub holds_with_unit_squares: bool,
}

fn square_rules(order: u32, square: NCExpr) -> RewriteSystem {
    let mut sys = RewriteSystem::new(order);
    sys.insert(vec![0, 0], square.clone());
    sys.insert(vec![1, 1], square);
    sys
}

/// Expands `(e₁e₂ + q⁻¹e₂e₁)^p` modulo `e₁² = e₂² = 0` and compares it with
/// `(e₁e₂)^p − (e₂e₁)^p`. The same comparison with `eᵢ² = 1` is recorded
/// to flag that the identity depends on nilpotent squares.
pub fn expand_super_serre(p: u32) -> SuperSerreReport {
    let order = 2 * p;
    let one = Cyclo::one(order);
    let w = |v: &[u8]| NCExpr::word(order, Word(v.to_vec()), one.clone());
    let qinv = Cyclo::root_pow(order, -1);
    let lhs = w(&[0, 1]).add(&w(&[1, 0]).scale(&qinv)).pow(p);
    let rhs = w(&[0, 1]).pow(p).sub(&w(&[1, 0]).pow(p));
    let names = vec!["e1".to_string(), "e2".to_string()];
    let compare = |square: NCExpr| {
        let sys = square_rules(order, square);
        let l = sys.reduce(&lhs, usize::MAX, Strategy::Leftmost).normal;
        let r = sys.reduce(&rhs, usize::MAX, Strategy::Leftmost).normal;
        (l == r, l, r)
    };
    let (pass, l, r) = compare(NCExpr::zero(order));
    let (unit, _, _) = compare(NCExpr::one(order));
    SuperSerreReport {
        p,
        convention: "e_i^2 = 0".into(),
        lhs: l.render(&names),
        rhs: r.render(&names),
        pass,
        holds_with_unit_squares: unit,
    }
}

/// `e^{πi·x}` for rational `x` with `p·x` integral, in `ℚ(ζ_{2p})`.
fn exp_pi_i(x: &Rat, p: u32) -> Option<Cyclo> {
    let k = to_i64(&(x * int(p as i64)))?;
    Some(Cyclo::root_pow(2 * p, k))
}

/// Highest weights of the two screenings whose braiding defines the
/// variant, when they exist at this `p`.
fn screening_weights(variant: Variant, p: u32) -> Result<Option<[WeightVector; 2]>> {
    match (variant, p) {
        (Variant::A, _) => {
            let s = QuadSpace::super_side(p);
            Ok(Some([
                WeightVector::from_named(s.clone(), &[("a", int(-1))])?,
                WeightVector::from_named(s, &[("x", int(1)), ("a", rat(1, 2)), ("ad", rat(-1, 2))])?,
            ]))
        }
        (Variant::S, 1) => {
            let s = QuadSpace::super_side_unscaled();
            Ok(Some([
                WeightVector::from_named(
                    s.clone(),
                    &[("x", int(1)), ("alpha", rat(-1, 2)), ("alphad", rat(-1, 2))],
                )?,
                WeightVector::from_named(s, &[("x", int(1)), ("alpha", rat(1, 2)), ("alphad", rat(-1, 2))])?,
            ]))
        }
        _ => Ok(None),
    }
}

/// Braiding and Cartan data of one presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidingCheck {
    /// Variant.
    pub variant: Variant,
    /// Parameter `p`.
    pub p: u32,
    /// `ℬᵢⱼ = (−1)^{p(i)p(j)} q^{cᵢⱼ}` entrywise.
    pub parity_times_cartan: bool,
    /// `ℬ` equals `e^{πi(β̃ᵢ, β̃ⱼ)}` of the screening weights, when they exist.
    pub lattice: Option<bool>,
    /// Diagonal entries and the edge label `ℬ₁₂ℬ₂₁` match the Dynkin data
    /// `(q², −1; q⁻²)` for `a` and `(−1, −1; q⁻²)` for `s`.
    pub dynkin: bool,
    /// `Kᵢ xⱼ Kᵢ⁻¹` and `[Hᵢ, xⱼ]` reduce to `q^{cᵢⱼ}xⱼ` and `cᵢⱼxⱼ`, with
    /// opposite exponents on the lowering generators.
    pub weight_rules: bool,
    /// All of the above.
    pub pass: bool,
}

/// Checks the braiding matrix of `variant` at `p` against the Cartan
/// matrix, the lattice pairings and the Dynkin labels.
pub fn braiding_check(variant: Variant, p: u32) -> Result<BraidingCheck> {
    let pres = Presentation::build(variant, p)?;
    let b = pres.braiding();
    let c = pres.cartan();
    let par = pres.parity();
    let parity_times_cartan = (0..2).all(|i| {
        (0..2).all(|j| {
            let sign = if par[i] * par[j] == 1 { -1 } else { 1 };
            b[i][j] == pres.q(c[i][j]).scale(&int(sign))
        })
    });
    let lattice = match screening_weights(pres.variant(), p)? {
        Some(beta) => {
            let mut ok = true;
            for i in 0..2 {
                for j in 0..2 {
                    let pairing = beta[i].pair(&beta[j])?;
                    ok &= exp_pi_i(&pairing, p).as_ref() == Some(&b[i][j]);
                }
            }
            Some(ok)
        }
        None => None,
    };
    let minus = Cyclo::from_int(pres.order(), -1);
    let (d1, d2) = match pres.variant() {
        Variant::S => (minus.clone(), minus.clone()),
        _ => (pres.q(2), minus.clone()),
    };
    let dynkin = b[0][0] == d1 && b[1][1] == d2 && &b[0][1] * &b[1][0] == pres.q(-2);
    let mut weight_rules = true;
    for i in 0..2 {
        for (j, (&x, &xs)) in RAISING.iter().zip(LOWERING.iter()).enumerate() {
            for (y, s) in [(x, 1), (xs, -1)] {
                let conj = pres.word(&[pres.k()[i], y, pres.k_inv()[i]]);
                let expect = pres.word(&[y]).scale(&pres.q(s * c[i][j]));
                weight_rules &= pres.reduce(&conj, usize::MAX).normal == expect;
                let h = pres.word(&[super::presentation::CARTAN_H[i]]);
                let yv = pres.word(&[y]);
                let bracket = h.mul(&yv).sub(&yv.mul(&h));
                let expect = yv.scale(&Cyclo::from_int(pres.order(), s * c[i][j]));
                weight_rules &= pres.reduce(&bracket, usize::MAX).normal == expect;
            }
        }
    }
    let pass = parity_times_cartan && lattice.unwrap_or(true) && dynkin && weight_rules;
    Ok(BraidingCheck {
        variant: pres.variant(),
        p,
        parity_times_cartan,
        lattice,
        dynkin,
        weight_rules,
        pass,
    })
}

/// Braiding checks for every variant defined at `p`.
pub fn braiding_suite(p: u32) -> Result<Vec<BraidingCheck>> {
    let mut out = Vec::new();
    if p >= 2 {
        out.push(braiding_check(Variant::A, p)?);
    }
    out.push(braiding_check(Variant::S, p)?);
    Ok(out)
}

/// Outcome of [`replacement_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplacementReport {
    /// The cubic relator at `p = 2` reduces to zero using `x₁² = 0` alone.
    pub cubic_trivial: bool,
    /// The presentation carries `(x₁x₂ − q⁻¹x₂x₁)² = 0` in both halves.
    pub replacement_active: bool,
    /// `x₁² = x₂² = 0` alone leave an infinite-dimensional quotient.
    pub squares_alone_infinite: bool,
    /// Dimension of the Nichols part with the replacement.
    pub nichols_dimension: usize,
    /// Every critical pair of the rewriting system resolves.
    pub confluent: bool,
    /// All of the above, with dimension `4p = 8`.
    pub pass: bool,
}

/// Checks the degenerate variant `a` at `p = 2`: the cubic q-Serre relator
/// is trivial there and `(x₁x₂ − q⁻¹x₂x₁)² = 0` replaces it.
pub fn replacement_check(max_steps: usize) -> Result<ReplacementReport> {
    let pres = Presentation::build(Variant::A, 2)?;
    let order = pres.order();
    let one = Cyclo::one(order);
    let w = |v: &[u8]| NCExpr::word(order, Word(v.to_vec()), one.clone());
    let qq = &pres.q(1) + &pres.q(-1);
    let cubic = w(&[0, 0, 1]).sub(&w(&[0, 1, 0]).scale(&qq)).add(&w(&[1, 0, 0]));
    let squares = square_rules(order, NCExpr::zero(order));
    let cubic_trivial = squares.reduce(&cubic, usize::MAX, Strategy::Leftmost).normal.is_zero();
    let replacement_active = pres
        .relations()
        .iter()
        .filter(|r| r.label.contains("q^-1") && r.label.contains(")^2"))
        .count()
        == 2;
    let squares_alone_infinite = complete(order, &[w(&[0, 0]), w(&[1, 1])], 8).is_err();
    let nichols_dimension = pres.nichols().dimension;
    let confluent = pres.system().critical_pairs(max_steps).confluent();
    Ok(ReplacementReport {
        cubic_trivial,
        replacement_active,
        squares_alone_infinite,
        nichols_dimension,
        confluent,
        pass: cubic_trivial && replacement_active && squares_alone_infinite && nichols_dimension == 8 && confluent,
    })
}

/// Outcome of [`strategy_agreement`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    /// Words reduced.
    pub words: usize,
    /// Words whose two normal forms differ.
    pub disagreements: Vec<String>,
    /// Words whose reduction ran out of budget.
    pub inconclusive: usize,
    /// Combined verdict.
    pub verdict: Verdict,
}

/// Reduces each word leftmost-first and rightmost-first and compares.
pub fn strategy_agreement(pres: &Presentation, words: &[Vec<u8>], max_steps: usize) -> AgreementReport {
    let mut disagreements = Vec::new();
    let mut inconclusive = 0;
    for w in words {
        let e = pres.word(w);
        let a = pres.reduce_with(&e, max_steps, Strategy::Leftmost);
        let b = pres.reduce_with(&e, max_steps, Strategy::Rightmost);
        if !(a.complete && b.complete) {
            inconclusive += 1;
        } else if a.normal != b.normal {
            disagreements.push(pres.render(&e));
        }
    }
    let verdict = if !disagreements.is_empty() {
        Verdict::Fail
    } else if inconclusive > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    AgreementReport {
        words: words.len(),
        disagreements,
        inconclusive,
        verdict,
    }
}

/// Every word of length at most `max_len` in the generators of `pres`.
pub fn all_words(pres: &Presentation, max_len: usize) -> Vec<Vec<u8>> {
    let n = pres.names().len() as u8;
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..n {
                let mut v: Vec<u8> = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
