//! q-series characters of the affine, βγ, Fock, Weyl and singlet modules,
//! and the character identities relating them.
//!
//! Every character is a [`BiSeries`] in `q` and `z` (with `z` in units of
//! the fundamental weight, so `z^α = z²`), optionally graded by `w`.
//! Factors `(z^{−α}; q)∞` contain `1 − z^{−2}` at `q⁰`; their inverses are
//! expanded in decreasing powers of `z`, and every result is clipped to the
//! requested z-window.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::rat::{ceil_i64, int, Rat};
use crate::arith::series::{BiSeries, Discrepancy, Exps};
use crate::error::{Error, Result};
use crate::lattice::{delta_rs, lambda_rs, QuadSpace};

/// A Pochhammer argument `z^z q^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochArg {
    /// z-exponent.
    pub z: Rat,
    /// q-exponent.
    pub q: Rat,
}

impl PochArg {
    /// `z^z q^q`.
    pub fn new(z: i64, q: i64) -> Self {
        PochArg { z: int(z), q: int(q) }
    }
}

fn check_args(args: &[PochArg]) -> Result<()> {
    for a in args {
        if a.q < Rat::zero() || (a.q.is_zero() && a.z >= Rat::zero()) {
            return Err(Error::Domain(format!(
                "Pochhammer argument z^{} q^{} does not converge in the decreasing-z expansion region",
                a.z, a.q
            )));
        }
    }
    Ok(())
}

/// `(x₁, …, x_m; q)∞ = Π_{n≥0} Π_i (1 − x_i qⁿ)`, exact below `q^order`.
pub fn pochhammer(args: &[PochArg], order: &Rat) -> Result<BiSeries> {
    check_args(args)?;
    let mut out = BiSeries::one(order.clone());
    for a in args {
        let mut n = Rat::zero();
        while &(&a.q + &n) < order {
            let mut factor = BiSeries::one(order.clone());
            factor.add_term(Exps::new(&a.q + &n, a.z.clone(), 0), int(-1))?;
            out = out.mul(&factor)?;
            n += Rat::one();
        }
    }
    Ok(out.truncate(order))
}

/// `1 / (x₁, …, x_m; q)∞`, exact below `q^order` and for z-exponents at or
/// above `z_floor`.
///
/// Factors `1 − z^m` with `m < 0` at `q⁰` are inverted as geometric series
/// in `z^m`; the remaining product has a unit leading term.
pub fn pochhammer_inv(args: &[PochArg], order: &Rat, z_floor: &Rat) -> Result<BiSeries> {
    check_args(args)?;
    if order <= &Rat::zero() {
        return Ok(BiSeries::zero(order.clone()));
    }
    let mut shifted = Vec::with_capacity(args.len());
    let mut at_zero = Vec::new();
    for a in args {
        if a.q.is_zero() {
            at_zero.push(a.z.clone());
            shifted.push(PochArg {
                z: a.z.clone(),
                q: int(1),
            });
        } else {
            shifted.push(a.clone());
        }
    }
    let unit_part = pochhammer(&shifted, order)?.inv(None)?;
    if at_zero.is_empty() {
        return Ok(unit_part);
    }
    let top = unit_part
        .terms()
        .map(|(e, _)| e.z.clone())
        .max()
        .unwrap_or_else(Rat::zero);
    let inner_floor = z_floor - &top;
    let mut geometric = BiSeries::one(order.clone());
    for m in at_zero {
        let mut factor = BiSeries::one(order.clone());
        factor.add_term(Exps::new(Rat::zero(), m, 0), int(-1))?;
        geometric = geometric.mul(&factor.inv(Some(&inner_floor))?)?;
    }
    geometric.mul(&unit_part)
}

/// `1/(q; q)∞`.
pub fn eta_inv(order: &Rat) -> Result<BiSeries> {
    pochhammer_inv(&[PochArg::new(0, 1)], order, &Rat::zero())
}

/// `1/(z^α q, z^{−α}, q; q)∞`, the common denominator of affine characters.
pub fn affine_denominator(order: &Rat, z_floor: &Rat) -> Result<BiSeries> {
    pochhammer_inv(
        &[PochArg::new(2, 1), PochArg::new(-2, 0), PochArg::new(0, 1)],
        order,
        z_floor,
    )
}

/// `1/(z^α q, z^{−α} q, q; q)∞`, the denominator of Weyl-module characters.
pub fn weyl_denominator(order: &Rat) -> Result<BiSeries> {
    pochhammer_inv(
        &[PochArg::new(2, 1), PochArg::new(-2, 1), PochArg::new(0, 1)],
        order,
        &Rat::zero(),
    )
}

/// `χ_n(x) = x^n + x^{n−2} + … + x^{−n}`, the character of `L(nϖ)`, in `z`
/// (`in_w = false`) or in `w` (`in_w = true`).
pub fn sl2_character(n: i64, in_w: bool, order: &Rat) -> Result<BiSeries> {
    let mut out = BiSeries::zero(order.clone());
    for k in 0..=n {
        let e = n - 2 * k;
        let (z, w) = if in_w { (Rat::zero(), e) } else { (int(e), 0) };
        out.add_term(Exps::new(Rat::zero(), z, w), int(1))?;
    }
    Ok(out)
}

/// Weyl-symmetrized `w^μ`: `(w^{μ+1} − w^{−μ−1})/(w − w^{−1})`, which is
/// `χ_μ` for `μ ≥ 0`, zero for `μ = −1` and `−χ_{−μ−2}` for `μ ≤ −2`.
pub fn weyl_symmetrized(mu: i64, order: &Rat) -> Result<BiSeries> {
    match mu {
        m if m >= 0 => sl2_character(m, true, order),
        -1 => Ok(BiSeries::zero(order.clone())),
        m => Ok(sl2_character(-m - 2, true, order)?.scale(&int(-1))),
    }
}

/// `f_{r,s} = z^{λ_{r,s}} q^{Δ_{r,s}}`.
pub fn f_rs(p: i64, r: i64, s: i64, c: Rat, order: &Rat) -> BiSeries {
    BiSeries::monomial(c, delta_rs(p, r, s), lambda_rs(p, r, s), 0, order.clone())
}

/// The kinds of module whose characters are available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharKind {
    /// The Fock module `π^α_{α_{r,s}}`: `z^{λ_{r,s}} q^{Δ_{r,s}} / (q;q)∞`.
    Fock { p: i64, r: i64, s: i64 },
    /// The βγ system: `1/(z^α q, z^{−α}; q)∞`.
    BetaGamma,
    /// `βγ ⊗ V_{r,s}` graded by `w`: `Σ_n w^{s+2n−1} f_{r,2n+s} / den`.
    LatticeModule { p: i64, r: i64, s: i64 },
    /// The simple module `L⁺_k(λ_{r,s})`.
    SimpleAffine { p: i64, r: i64, s: i64 },
    /// The Weyl module `V^k(nϖ)`.
    Weyl { p: i64, n: i64 },
    /// The `w`-graded module `Σ_{n≥0} χ_{2n+s−1}(w) ch L⁺_k(λ_{r,2n+s})`.
    XModule { p: i64, r: i64, s: i64 },
    /// The singlet module `M_n` at `p = 1`.
    Singlet { n: i64 },
    /// The algebra `FT_p = ⊕_{n even} L(nϖ) ⊗ V^k(nϖ)`.
    FtAlgebra { p: i64 },
    /// The Heisenberg module `π^h_{λϖ}` at `p = 1`.
    PiH { lambda: i64 },
}

impl CharKind {
    /// Parses a CLI kind name with its parameters.
    pub fn from_cli(kind: &str, p: i64, r: i64, s: i64, n: i64) -> Result<Self> {
        Ok(match kind {
            "fock" => CharKind::Fock { p, r, s },
            "betagamma" => CharKind::BetaGamma,
            "lattice" | "lattice-module" => CharKind::LatticeModule { p, r, s },
            "simple" | "simple-affine" => CharKind::SimpleAffine { p, r, s },
            "weyl" => CharKind::Weyl { p, n },
            "x" | "x-module" => CharKind::XModule { p, r, s },
            "singlet" => CharKind::Singlet { n },
            "ft" | "ft-algebra" => CharKind::FtAlgebra { p },
            "pi-h" => CharKind::PiH { lambda: n },
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

/// Margin below the window kept while expanding in decreasing powers of `z`.
fn floor_for(window: (i64, i64), top: &Rat) -> Rat {
    int(window.0) - top - int(2)
}

/// Sum of `numerators · den`, where each numerator is `(c, q, z, w)` and
/// `den` is the affine denominator; clipped to `window`.
fn over_affine_denominator(numerators: &[(Rat, Rat, Rat, i64)], order: &Rat, window: (i64, i64)) -> Result<BiSeries> {
    if numerators.is_empty() {
        return BiSeries::zero(order.clone()).clip(window.0, window.1);
    }
    let min_q = numerators.iter().map(|n| n.1.clone()).min().expect("nonempty");
    let top_z = numerators.iter().map(|n| n.2.clone()).max().expect("nonempty");
    let den = affine_denominator(&(order - &min_q), &floor_for(window, &top_z))?;
    let mut out: Option<BiSeries> = None;
    for (c, q, z, w) in numerators {
        let term = den.shift(q, z, *w).scale(c);
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term)?,
        });
    }
    out.expect("nonempty").truncate(order).clip(window.0, window.1)
}

/// Numerator terms of `ch L⁺_k(λ_{r,s})`: `f_{r,s} − f_{r,−s}`.
fn simple_numerator(p: i64, r: i64, s: i64, w: i64) -> Vec<(Rat, Rat, Rat, i64)> {
    vec![
        (int(1), delta_rs(p, r, s), lambda_rs(p, r, s), w),
        (int(-1), delta_rs(p, r, -s), lambda_rs(p, r, -s), w),
    ]
}

/// Largest `m ≥ 0` with `Δ_{r,±m}` below `order` for some sign; the sums
/// over `m` stop there since `Δ` grows quadratically.
fn m_bound(p: i64, r: i64, order: &Rat) -> i64 {
    let mut m = 0;
    let mut last = 0;
    while m < 4 * (ceil_i64(order).abs() + p + r.abs() + 4) {
        if &delta_rs(p, r, m) < order || &delta_rs(p, r, -m) < order {
            last = m;
        }
        m += 1;
    }
    last
}

/// Terms `(weight-index n, f-index m = 2n + s)` of the lattice coset sum.
fn coset_terms(p: i64, r: i64, s: i64, order: &Rat) -> Vec<i64> {
    let bound = m_bound(p, r, order);
    (-bound - 2..=bound + 2)
        .filter(|m| (m - s).rem_euclid(2) == 0)
        .filter(|&m| &delta_rs(p, r, m) < order)
        .collect()
}

/// Character of the given kind, exact below `q^order`, on `window`.
pub fn character(kind: &CharKind, order: &Rat, window: (i64, i64)) -> Result<BiSeries> {
    match *kind {
        CharKind::Fock { p, r, s } => Ok(eta_inv(&(order - delta_rs(p, r, s)))?
            .shift(&delta_rs(p, r, s), &lambda_rs(p, r, s), 0)
            .truncate(order)
            .clip(window.0, window.1)?),
        CharKind::BetaGamma => pochhammer_inv(
            &[PochArg::new(2, 1), PochArg::new(-2, 0)],
            order,
            &floor_for(window, &Rat::zero()),
        )?
        .clip(window.0, window.1),
        CharKind::LatticeModule { p, r, s } => {
            let nums: Vec<_> = coset_terms(p, r, s, order)
                .into_iter()
                .map(|m| (int(1), delta_rs(p, r, m), lambda_rs(p, r, m), m - 1))
                .collect();
            over_affine_denominator(&nums, order, window)
        }
        CharKind::SimpleAffine { p, r, s } => {
            if r == 0 && s <= 0 {
                return Err(Error::Domain("the character formula needs r ≠ 0 or s > 0".into()));
            }
            over_affine_denominator(&simple_numerator(p, r, s, 0), order, window)
        }
        CharKind::Weyl { p, n } => {
            if n < 0 {
                return Err(Error::Domain("Weyl modules need n ≥ 0".into()));
            }
            let shift = delta_rs(p, 1, n + 1);
            let den = weyl_denominator(&(order - &shift))?;
            Ok(sl2_character(n, false, &(order - &shift))?
                .mul(&den)?
                .shift(&shift, &Rat::zero(), 0)
                .truncate(order)
                .clip(window.0, window.1)?)
        }
        CharKind::XModule { p, r, s } => {
            let mut nums = Vec::new();
            let bound = m_bound(p, r, order);
            let mut m = s;
            while m <= bound + 2 {
                for k in 0..m {
                    let w = m - 1 - 2 * k;
                    nums.extend(simple_numerator(p, r, m, w));
                }
                m += 2;
            }
            over_affine_denominator(&nums, order, window)
        }
        CharKind::Singlet { n } => singlet(n, order)?.clip(window.0, window.1),
        CharKind::FtAlgebra { p } => {
            let mut out = BiSeries::zero(order.clone()).clip(window.0, window.1)?;
            let mut n = 0;
            while &delta_rs(p, 1, n + 1) < order {
                let weyl = character(&CharKind::Weyl { p, n }, order, window)?;
                out = out.add(&weyl.scale(&int(n + 1)))?;
                n += 2;
            }
            Ok(out)
        }
        CharKind::PiH { lambda } => pi_h(lambda, order)?.clip(window.0, window.1),
    }
}

/// Conformal weight of `e^{−n u₁}` for the singlet factor with
/// `u₁ = −u` and background `½ u₁`: `n(n+1)/2`.
fn singlet_fock_weight(n: i64) -> Rat {
    let space = QuadSpace::rank_one("u1");
    let mu = [int(-n)];
    let background = [Rat::new(1.into(), 2.into())];
    space.pair_coeffs(&mu, &mu) / int(2) - space.pair_coeffs(&background, &mu)
}

/// `ch M_n = Σ_{j≥0} (−1)^j ch π^{u}_{−n−j}` at `p = 1`.
pub fn singlet(n: i64, order: &Rat) -> Result<BiSeries> {
    let eta = eta_inv(order)?;
    let mut out = BiSeries::zero(order.clone());
    let mut j = 0;
    loop {
        let weight = singlet_fock_weight(n + j);
        if &weight >= order && n + j >= 0 {
            break;
        }
        if &weight < order {
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            out = out.add(&eta.shift(&weight, &Rat::zero(), 0).scale(&sign).truncate(order))?;
        }
        j += 1;
    }
    Ok(out)
}

/// Conformal weight of `π^h_{λϖ}` at `p = 1`: the momentum `μ = c·h` with
/// `(h, μ) = λ` in the main space, weighed by `½(μ, μ)`.
pub fn pi_h_weight(lambda: i64) -> Rat {
    let space = QuadSpace::main(1);
    let h = [int(0), int(-2), int(-1)];
    let c = int(lambda) / space.pair_coeffs(&h, &h);
    let mu: Vec<Rat> = h.iter().map(|x| x * &c).collect();
    space.pair_coeffs(&mu, &mu) / int(2)
}

/// `ch π^h_{λϖ} = z^λ q^{weight} / (q;q)∞`.
pub fn pi_h(lambda: i64, order: &Rat) -> Result<BiSeries> {
    let weight = pi_h_weight(lambda);
    Ok(eta_inv(&(order - &weight))?
        .shift(&weight, &int(lambda), 0)
        .truncate(order))
}

/// Assembles `Σ_{λ≥0} χ_λ(w) Σ_σ (−1)^{l(σ)} ch V^{h=σ∘λ}` from the
/// h-weight sectors `μ ↦ ch V^{h=μ}(z, q)`.
pub fn atiyah_bott_character(sectors: &BTreeMap<i64, BiSeries>, order: &Rat) -> Result<BiSeries> {
    let mut out: Option<BiSeries> = None;
    for (&mu, ch) in sectors {
        let sym = weyl_symmetrized(mu, order)?;
        if sym.is_empty() {
            continue;
        }
        let term = sym.mul(ch)?;
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term)?,
        });
    }
    Ok(out.unwrap_or_else(|| BiSeries::zero(order.clone())))
}

/// The w-sectors of `βγ ⊗ V_{r,s}`: `w^{s+2n−1} ↦ ch_{βγ} · ch π^α_{α_{r,2n+s}}`.
pub fn lattice_sectors(p: i64, r: i64, s: i64, order: &Rat, window: (i64, i64)) -> Result<BTreeMap<i64, BiSeries>> {
    let mut out = BTreeMap::new();
    for m in coset_terms(p, r, s, order) {
        let delta = delta_rs(p, r, m);
        let lambda = lambda_rs(p, r, m);
        let fock = eta_inv(&(order - &delta))?.shift(&delta, &lambda, 0);
        let beta_gamma = pochhammer_inv(
            &[PochArg::new(2, 1), PochArg::new(-2, 0)],
            &(order - &delta),
            &floor_for(window, &lambda),
        )?;
        out.insert(m - 1, beta_gamma.mul(&fock)?.truncate(order).clip(window.0, window.1)?);
    }
    Ok(out)
}

/// Outcome of one character identity check.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    /// Identity name.
    pub identity: String,
    /// Parameters, as displayed.
    pub params: String,
    /// q-order of the comparison, as `"num/den"`.
    #[serde(serialize_with = "crate::report::rat_text")]
    pub order: Rat,
    /// z-window compared.
    pub window: (i64, i64),
    /// Number of nonzero coefficients on the left side.
    pub terms_compared: usize,
    /// First disagreement, if any.
    pub first_difference: Option<Discrepancy>,
    /// `true` iff both sides agree on the window.
    pub pass: bool,
}

fn compare(
    identity: &str,
    params: String,
    left: &BiSeries,
    right: &BiSeries,
    order: &Rat,
    window: (i64, i64),
) -> Result<IdentityReport> {
    let diff = left.first_difference(right, window.0, window.1)?;
    Ok(IdentityReport {
        identity: identity.to_string(),
        params,
        order: order.clone(),
        window,
        terms_compared: left.len(),
        pass: diff.is_none(),
        first_difference: diff,
    })
}

/// `ch V^k(nϖ) = ch L⁺_k(λ_{1,n+1})`.
pub fn weyl_simple_check(p: i64, n: i64, order: &Rat, window: (i64, i64)) -> Result<IdentityReport> {
    let weyl = character(&CharKind::Weyl { p, n }, order, window)?;
    let simple = character(&CharKind::SimpleAffine { p, r: 1, s: n + 1 }, order, window)?;
    compare("weyl-simple", format!("p={p} n={n}"), &weyl, &simple, order, window)
}

/// `Σ_{n≥0} χ_{2n+s−1}(w) ch L⁺_k(λ_{r,2n+s})` against the Atiyah–Bott
/// assembly of `ch_{βγ} · Σ_n w^{s+2n−1} ch π^α_{α_{r,2n+s}}`, both
/// `w`-graded and at `w = 1`.
pub fn decomposition_check(p: i64, r: i64, s: i64, order: &Rat, window: (i64, i64)) -> Result<IdentityReport> {
    let left = character(&CharKind::XModule { p, r, s }, order, window)?;
    let sectors = lattice_sectors(p, r, s, order, window)?;
    let right = atiyah_bott_character(&sectors, order)?.clip(window.0, window.1)?;
    let params = format!("p={p} r={r} s={s}");
    let graded = compare("x-decomposition", params.clone(), &left, &right, order, window)?;
    if !graded.pass {
        return Ok(graded);
    }
    compare(
        "x-decomposition",
        params,
        &left.at_w_one(),
        &right.at_w_one(),
        order,
        window,
    )
    .map(|mut rep| {
        rep.terms_compared = graded.terms_compared;
        rep
    })
}

/// `ch FT₁ = Σ_{n+m even} ch M_n · ch M_m · ch π^h_{(n+m)ϖ}`, with the
/// singlet characters supplied by `singlet_char`.
pub fn p1_decomposition_with(
    order: &Rat,
    window: (i64, i64),
    singlet_char: impl Fn(i64, &Rat) -> Result<BiSeries> + Sync,
) -> Result<IdentityReport> {
    let left = character(&CharKind::FtAlgebra { p: 1 }, order, window)?;
    let reach = window.0.abs().max(window.1.abs());
    let mut bound = 0i64;
    while int(bound * (bound + 1) / 2) < order + int(reach * reach) {
        bound += 1;
    }
    let pairs: Vec<(i64, i64)> = (-bound..=bound)
        .flat_map(|n| (-bound..=bound).map(move |m| (n, m)))
        .filter(|(n, m)| (n + m).rem_euclid(2) == 0 && n + m >= window.0 && n + m <= window.1)
        .filter(|(n, m)| {
            let lead = singlet_fock_weight(n.abs()) + singlet_fock_weight(m.abs()) + pi_h_weight(n + m);
            &lead < order
        })
        .collect();
    let terms: Vec<BiSeries> = pairs
        .par_iter()
        .map(|&(n, m)| {
            let piw = pi_h_weight(n + m);
            let rel = order - &piw;
            let prod = singlet_char(n, &rel)?.mul(&singlet_char(m, &rel)?)?;
            Ok(prod.mul(&pi_h(n + m, order)?)?.truncate(order))
        })
        .collect::<Result<_>>()?;
    let mut right = BiSeries::zero(order.clone());
    for t in terms {
        right = right.add(&t)?;
    }
    compare(
        "p1-decomposition",
        "p=1".into(),
        &left,
        &right.clip(window.0, window.1)?,
        order,
        window,
    )
}

/// [`p1_decomposition_with`] using the telescoping singlet characters.
pub fn p1_decomposition_check(order: &Rat, window: (i64, i64)) -> Result<IdentityReport> {
    p1_decomposition_with(order, window, singlet)
}

/// Left side of the constant-term pipeline:
/// `CT_w[(w^{−(2n+s−1)} − w^{−(2n+s+1)}) · w · (A_{p−r,3−s} − B_{p−r,3−s})]`.
pub fn ct_pipeline(p: i64, r: i64, n: i64, s: i64, order: &Rat, window: (i64, i64)) -> Result<BiSeries> {
    let (rr, ss) = (p - r, 3 - s);
    let a = character(&CharKind::LatticeModule { p, r: rr, s: ss }, order, window)?;
    let b = character(&CharKind::XModule { p, r: rr, s: ss }, order, window)?;
    let m = 2 * n + s;
    let mut weight = BiSeries::zero(order.clone());
    weight.add_term(Exps::new(Rat::zero(), Rat::zero(), -(m - 1) + 1), int(1))?;
    weight.add_term(Exps::new(Rat::zero(), Rat::zero(), -(m + 1) + 1), int(-1))?;
    Ok(weight.mul(&a.sub(&b)?)?.ct_w())
}

/// The constant-term pipeline against both
/// `(f_{p−r,−(2n+s−1)} − f_{p−r,2n+s+1}) / den` and the character formula
/// for `L⁺_k(λ_{−r,−2n−s})`.
pub fn ct_pipeline_check(p: i64, r: i64, n: i64, s: i64, order: &Rat, window: (i64, i64)) -> Result<IdentityReport> {
    let left = ct_pipeline(p, r, n, s, order, window)?;
    let m = 2 * n + s;
    let closed = over_affine_denominator(
        &[
            (int(1), delta_rs(p, p - r, -(m - 1)), lambda_rs(p, p - r, -(m - 1)), 0),
            (int(-1), delta_rs(p, p - r, m + 1), lambda_rs(p, p - r, m + 1), 0),
        ],
        order,
        window,
    )?;
    let params = format!("p={p} r={r} n={n} s={s}");
    let first = compare("ct-pipeline", params.clone(), &left, &closed, order, window)?;
    if !first.pass {
        return Ok(first);
    }
    let formula = character(&CharKind::SimpleAffine { p, r: -r, s: -m }, order, window)?;
    compare("ct-pipeline", params, &left, &formula, order, window)
}

/// Coefficient of `z^h q^conf` in `FT_p`, the oracle for screening kernels.
pub fn ft_coefficient(ft: &BiSeries, h: i64, conf: &Rat) -> Rat {
    ft.coeff(conf, &int(h), 0)
}
