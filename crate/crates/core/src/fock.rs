//! Fock states and the vertex-operator calculus of Heisenberg and lattice
//! vertex algebras.
//!
//! A [`FockState`] is a finite rational combination of monomials
//! `h¹_{−m₁} ⋯ hᵏ_{−m_k} e^μ` where each `hⁱ` is a generator of the ambient
//! [`QuadSpace`] and `μ` is a rational momentum. The engine computes
//! `Y(a, z)b` coefficient by coefficient via
//!
//! ```text
//! Y(h¹_{−m₁−1} ⋯ e^x, z) = : ∂^{(m₁)}h¹(z) ⋯ ε·e^x z^{x₀} E⁻(x, z) E⁺(x, z) :
//! ```
//!
//! so `a_(n)b` (the coefficient of `z^{−n−1}`), OPE singular parts,
//! translations and conformal weights are all exact.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::rat::{binomial, int, rat, to_i64, to_pretty, Rat};
use crate::error::{Error, Result};
use crate::lattice::{format_vector, invert_matrix, QuadSpace, WeightVector};

/// Sorted list of creation modes `(generator, m)` standing for `g_{−m}`, `m ≥ 1`.
pub type Modes = Vec<(usize, u32)>;

/// A single basis monomial: creation modes applied to `e^momentum`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    /// Momentum coefficients in the generator basis.
    pub momentum: Vec<Rat>,
    /// Creation modes in canonical (sorted) order.
    pub modes: Modes,
}

impl Monomial {
    /// Total mode level `Σ m`.
    pub fn level(&self) -> u32 {
        self.modes.iter().map(|(_, m)| m).sum()
    }
}

/// Finite rational combination of Fock monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockState {
    space: Arc<QuadSpace>,
    terms: BTreeMap<Monomial, Rat>,
}

fn insert_mode(modes: &mut Modes, item: (usize, u32)) {
    let pos = modes.partition_point(|x| *x <= item);
    modes.insert(pos, item);
}

fn merge_modes(a: &Modes, b: &Modes) -> Modes {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out
}

impl FockState {
    /// The zero state.
    pub fn zero(space: Arc<QuadSpace>) -> Self {
        FockState {
            space,
            terms: BTreeMap::new(),
        }
    }

    /// The vacuum `|0⟩`.
    pub fn vacuum(space: Arc<QuadSpace>) -> Self {
        let n = space.dim();
        Self::exp(space, vec![Rat::zero(); n])
    }

    /// The lattice state `e^μ`.
    pub fn exp(space: Arc<QuadSpace>, momentum: Vec<Rat>) -> Self {
        assert_eq!(momentum.len(), space.dim(), "momentum length");
        let mut s = Self::zero(space);
        s.terms.insert(
            Monomial {
                momentum,
                modes: Vec::new(),
            },
            Rat::one(),
        );
        s
    }

    /// `e^x` for a weight vector.
    pub fn exp_vector(x: &WeightVector) -> Self {
        Self::exp(x.space().clone(), x.coeffs().to_vec())
    }

    /// The state `x_{−m}|0⟩` for a vector `x`, i.e. `Σ xᵢ gᵢ_{−m}|0⟩`.
    pub fn heisenberg(space: Arc<QuadSpace>, x: &[Rat], m: u32) -> Self {
        let vac = Self::vacuum(space);
        vac.mode_vec(x, -(m as i64))
    }

    /// The state `g_{−m}|0⟩` for a named generator.
    pub fn generator(space: Arc<QuadSpace>, name: &str, m: u32) -> Result<Self> {
        let i = space.index_of(name)?;
        let mut x = vec![Rat::zero(); space.dim()];
        x[i] = Rat::one();
        Ok(Self::heisenberg(space, &x, m))
    }

    /// Builds a state from monomials.
    pub fn from_terms(space: Arc<QuadSpace>, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut s = Self::zero(space);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    /// Adds `c · m` in place.
    pub fn add_term(&mut self, mut m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        m.modes.sort_unstable();
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Ambient space.
    pub fn space(&self) -> &Arc<QuadSpace> {
        &self.space
    }

    /// Terms in canonical order (momentum, then modes).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// `true` when there are no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `true` for the zero state.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a monomial.
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch("states live in different spaces".into()))
        }
    }

    /// Sum of two states.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference of two states.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&int(-1)))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.space.clone());
        }
        FockState {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Distinct momenta occurring in the state.
    pub fn momenta(&self) -> Vec<Vec<Rat>> {
        let mut out: Vec<Vec<Rat>> = self.terms.keys().map(|m| m.momentum.clone()).collect();
        out.dedup();
        out
    }

    /// Applies the Heisenberg mode `g_n` of a generator.
    pub fn mode(&self, g: usize, n: i64) -> Self {
        let mut x = vec![Rat::zero(); self.space.dim()];
        x[g] = Rat::one();
        self.mode_vec(&x, n)
    }

    /// Applies the mode `x_n = Σ xᵢ gᵢ_n` of a vector `x`: creation for
    /// `n < 0`, commutators `[x_n, g_{−n}] = n (x, g)` for `n > 0`, and the
    /// pairing with the momentum for `n = 0`.
    pub fn mode_vec(&self, x: &[Rat], n: i64) -> Self {
        let mut out = Self::zero(self.space.clone());
        for (m, c) in &self.terms {
            if n < 0 {
                for (g, xg) in x.iter().enumerate() {
                    if xg.is_zero() {
                        continue;
                    }
                    let mut mm = m.clone();
                    insert_mode(&mut mm.modes, (g, (-n) as u32));
                    out.add_term(mm, c * xg);
                }
            } else if n == 0 {
                let pr = self.space.pair_coeffs(x, &m.momentum);
                out.add_term(m.clone(), c * pr);
            } else {
                let level = n as u32;
                let mut idx = 0;
                while idx < m.modes.len() {
                    let (g, l) = m.modes[idx];
                    let mut end = idx + 1;
                    while end < m.modes.len() && m.modes[end] == (g, l) {
                        end += 1;
                    }
                    if l == level {
                        let pr = self.space.pair_gen(g, x);
                        if !pr.is_zero() {
                            let mut mm = m.clone();
                            mm.modes.remove(idx);
                            out.add_term(mm, c * pr * int(n) * int((end - idx) as i64));
                        }
                    }
                    idx = end;
                }
            }
        }
        out
    }

    /// The translation operator `T`: a derivation with
    /// `T g_{−m} = m g_{−m−1}` and `T e^μ = μ_{−1} e^μ`.
    pub fn translate(&self) -> Self {
        let mut out = Self::zero(self.space.clone());
        for (m, c) in &self.terms {
            for i in 0..m.modes.len() {
                let (g, l) = m.modes[i];
                let mut mm = m.clone();
                mm.modes[i] = (g, l + 1);
                out.add_term(mm, c * int(l as i64));
            }
            for (g, mu) in m.momentum.iter().enumerate() {
                if mu.is_zero() {
                    continue;
                }
                let mut mm = m.clone();
                insert_mode(&mut mm.modes, (g, 1));
                out.add_term(mm, c * mu);
            }
        }
        out
    }

    /// `T^k`.
    pub fn translate_n(&self, k: u32) -> Self {
        let mut s = self.clone();
        for _ in 0..k {
            s = s.translate();
        }
        s
    }

    /// Moves every momentum-free term onto `e^μ`: the creation modes of
    /// `self` applied to the lattice state `e^μ`.
    pub fn with_momentum(&self, mu: &[Rat]) -> Result<Self> {
        let mut out = Self::zero(self.space.clone());
        for (m, c) in &self.terms {
            if m.momentum.iter().any(|x| !x.is_zero()) {
                return Err(Error::Domain("state already carries momentum".into()));
            }
            out.add_term(
                Monomial {
                    momentum: mu.to_vec(),
                    modes: m.modes.clone(),
                },
                c.clone(),
            );
        }
        Ok(out)
    }

    /// Image under the linear map sending generator `i` to the vector
    /// `images[i]` of `space`, applied to modes and momenta alike.
    pub fn map_linear(&self, space: Arc<QuadSpace>, images: &[Vec<Rat>]) -> Result<Self> {
        if images.len() != self.space.dim() || images.iter().any(|r| r.len() != space.dim()) {
            return Err(Error::SpaceMismatch("linear map has wrong shape".into()));
        }
        let mut out = Self::zero(space.clone());
        for (m, c) in &self.terms {
            let mut momentum = vec![Rat::zero(); space.dim()];
            for (i, mi) in m.momentum.iter().enumerate() {
                for (j, v) in images[i].iter().enumerate() {
                    momentum[j] += mi * v;
                }
            }
            let mut partial: Vec<(Modes, Rat)> = vec![(Vec::new(), c.clone())];
            for &(g, l) in &m.modes {
                let mut next = Vec::new();
                for (modes, coeff) in &partial {
                    for (j, v) in images[g].iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        let mut mm = modes.clone();
                        mm.push((j, l));
                        next.push((mm, coeff * v));
                    }
                }
                partial = next;
            }
            for (modes, coeff) in partial {
                out.add_term(
                    Monomial {
                        momentum: momentum.clone(),
                        modes,
                    },
                    coeff,
                );
            }
        }
        Ok(out)
    }

    /// Canonical text: terms in canonical order, e.g. `2*u[-1] a[-2] e^{u+v}`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mut factors: Vec<String> = m
                .modes
                .iter()
                .map(|(g, l)| format!("{}[-{}]", self.space.names()[*g], l))
                .collect();
            if m.momentum.iter().any(|x| !x.is_zero()) {
                factors.push(format!("e^{{{}}}", format_vector(&self.space, &m.momentum)));
            }
            if factors.is_empty() {
                s.push_str(&to_pretty(&a));
            } else {
                if !a.is_one() {
                    s.push_str(&to_pretty(&a));
                    s.push('*');
                }
                s.push_str(&factors.join(" "));
            }
        }
        s
    }

    /// JSON form: list of `{"c", "modes": [[name, m]], "momentum": "..."}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                serde_json::json!({
                    "c": crate::arith::rat::to_text(c),
                    "modes": m.modes.iter().map(|(g, l)| serde_json::json!([self.space.names()[*g], -(*l as i64)])).collect::<Vec<_>>(),
                    "momentum": m.momentum.iter().map(crate::arith::rat::to_text).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "text": self.pretty(), "terms": terms })
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// Polynomial in creation modes, used for `E⁻` coefficients.
type ModePoly = BTreeMap<Modes, Rat>;

/// Schur-type coefficients of `E⁻(x, z) = exp(Σ_{k>0} x_{−k} z^k / k)`.
struct Schur {
    x: Vec<Rat>,
    levels: Vec<ModePoly>,
}

impl Schur {
    fn new(x: Vec<Rat>) -> Self {
        let mut one = ModePoly::new();
        one.insert(Vec::new(), Rat::one());
        Schur { x, levels: vec![one] }
    }

    /// Coefficient of `z^d`, using `d·S_d = Σ_k x_{−k} S_{d−k}`.
    fn get(&mut self, d: usize) -> &ModePoly {
        while self.levels.len() <= d {
            let n = self.levels.len();
            let mut next = ModePoly::new();
            if self.x.iter().any(|c| !c.is_zero()) {
                for k in 1..=n {
                    for (modes, c) in &self.levels[n - k] {
                        for (g, xg) in self.x.iter().enumerate() {
                            if xg.is_zero() {
                                continue;
                            }
                            let mut mm = modes.clone();
                            insert_mode(&mut mm, (g, k as u32));
                            let e = next.entry(mm).or_insert_with(Rat::zero);
                            *e += c * xg * rat(1, n as i64);
                        }
                    }
                }
                next.retain(|_, v| !v.is_zero());
            }
            self.levels.push(next);
        }
        &self.levels[d]
    }
}

/// Partial result while applying the right-hand factors: modes, coefficient
/// and accumulated z-power.
type Partial = (Modes, Rat, i64);

fn apply_annihilation(space: &QuadSpace, g: usize, m: u32, momentum: &[Rat], items: Vec<Partial>) -> Vec<Partial> {
    let mut out = Vec::new();
    let mi = m as i64;
    for (modes, c, pw) in items {
        // n = 0 reads the momentum of the right-hand state.
        let pr = space.pair_gen(g, momentum);
        if !pr.is_zero() {
            out.push((modes.clone(), &c * pr * binomial(-1, mi), pw - 1 - mi));
        }
        let mut idx = 0;
        while idx < modes.len() {
            let (g2, l) = modes[idx];
            let mut end = idx + 1;
            while end < modes.len() && modes[end] == (g2, l) {
                end += 1;
            }
            let gram = space.gram(g, g2);
            if !gram.is_zero() {
                let n = l as i64;
                let mut mm = modes.clone();
                mm.remove(idx);
                let coeff = &c * gram * int(n) * int((end - idx) as i64) * binomial(-n - 1, mi);
                out.push((mm, coeff, pw - n - 1 - mi));
            }
            idx = end;
        }
    }
    out
}

fn apply_e_plus(space: &QuadSpace, x: &[Rat], items: Vec<Partial>) -> Vec<Partial> {
    if x.iter().all(Zero::is_zero) {
        return items;
    }
    let mut out = Vec::new();
    for (modes, c, pw) in items {
        // Group equal modes; each copy either stays or contributes −(x, g) z^{−m}.
        let mut groups: Vec<((usize, u32), usize)> = Vec::new();
        for &md in &modes {
            match groups.last_mut() {
                Some((k, n)) if *k == md => *n += 1,
                _ => groups.push((md, 1)),
            }
        }
        let mut acc: Vec<Partial> = vec![(Vec::new(), c, pw)];
        for ((g, l), count) in groups {
            let pr = -space.pair_gen(g, x);
            let mut next = Vec::new();
            for (mm, cc, pp) in &acc {
                let max_t = if pr.is_zero() { 0 } else { count };
                for t in 0..=max_t {
                    let mut m2 = mm.clone();
                    for _ in 0..(count - t) {
                        m2.push((g, l));
                    }
                    let factor = binomial(count as i64, t as i64)
                        * crate::arith::rat::pow(&pr, t as i64).expect("nonnegative power");
                    next.push((m2, cc * factor, pp - (t as i64) * (l as i64)));
                }
            }
            acc = next;
        }
        out.extend(acc);
    }
    out
}

fn compositions(total: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(rem: usize, parts: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() + 1 == parts {
            cur.push(rem);
            f(cur);
            cur.pop();
            return;
        }
        for k in 0..=rem {
            cur.push(k);
            rec(rem - k, parts, cur, f);
            cur.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), f);
}

/// Coefficient of `z^k` in `Y(a, z) b`.
///
/// Fails with [`Error::NonIntegralPower`] if `k − (x, μ)` is not an integer
/// for some pair of terms with momenta `x` (of `a`) and `μ` (of `b`).
pub fn vertex_coeff(a: &FockState, k: &Rat, b: &FockState) -> Result<FockState> {
    a.check_space(b)?;
    let space = a.space.clone();
    let mut out = FockState::zero(space.clone());
    let mut schur_cache: HashMap<Vec<Rat>, Schur> = HashMap::new();
    for (ta, ca) in &a.terms {
        let x = &ta.momentum;
        let factors: Vec<(usize, u32)> = ta.modes.iter().map(|&(g, l)| (g, l - 1)).collect();
        let schur = schur_cache.entry(x.clone()).or_insert_with(|| Schur::new(x.clone()));
        for (tb, cb) in &b.terms {
            let mu = &tb.momentum;
            let xmu = space.pair_coeffs(x, mu);
            let offset = k - &xmu;
            let r = to_i64(&offset).ok_or_else(|| {
                Error::NonIntegralPower(format!(
                    "z^{} requested but (x, μ) = {} for x = {}, μ = {}",
                    to_pretty(k),
                    to_pretty(&xmu),
                    format_vector(&space, x),
                    format_vector(&space, mu)
                ))
            })?;
            let sign = space.cocycle_sign(x, mu);
            let shifted: Vec<Rat> = x.iter().zip(mu).map(|(p, q)| p + q).collect();
            let nf = factors.len();
            for mask in 0..(1u32 << nf) {
                let mut items: Vec<Partial> = vec![(tb.modes.clone(), ca * cb * int(sign), 0)];
                for (i, &(g, m)) in factors.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        items = apply_annihilation(&space, g, m, mu, items);
                    }
                }
                let items = apply_e_plus(&space, x, items);
                let creators: Vec<(usize, u32)> = factors
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) == 0)
                    .map(|(_, f)| *f)
                    .collect();
                for (modes, c, pw) in items {
                    if c.is_zero() {
                        continue;
                    }
                    let rem = r - pw;
                    if rem < 0 {
                        continue;
                    }
                    let rem = rem as usize;
                    compositions(rem, creators.len() + 1, &mut |parts: &[usize]| {
                        let d = parts[creators.len()];
                        let poly = schur.get(d).clone();
                        let mut base = modes.clone();
                        let mut coeff = c.clone();
                        for (j, &(g, m)) in creators.iter().enumerate() {
                            let e = parts[j] as i64;
                            base.push((g, (e + m as i64 + 1) as u32));
                            coeff *= binomial(e + m as i64, m as i64);
                        }
                        for (pm, pc) in &poly {
                            out.add_term(
                                Monomial {
                                    momentum: shifted.clone(),
                                    modes: merge_modes(&base, pm),
                                },
                                &coeff * pc,
                            );
                        }
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The `n`-th product `a_(n) b`.
pub fn nth_product(a: &FockState, n: i64, b: &FockState) -> Result<FockState> {
    vertex_coeff(a, &int(-n - 1), b)
}

/// Singular OPE coefficients: entry `j − 1` is the coefficient of
/// `(z − w)^{−j}`, namely `a_(j−1) b`, for `j = 1..=max_pole`.
pub fn ope_singular(a: &FockState, b: &FockState, max_pole: u32) -> Result<Vec<FockState>> {
    (0..max_pole as i64)
        .into_par_iter()
        .map(|n| nth_product(a, n, b))
        .collect()
}

/// `L_0` eigenvalue of `s` for the conformal vector `l`, computed as `L_(1)`.
pub fn conf_weight(s: &FockState, l: &FockState) -> Result<Rat> {
    let image = nth_product(l, 1, s)?;
    eigenvalue(s, &image)
}

/// The scalar `λ` with `image = λ · s`, if it exists.
pub fn eigenvalue(s: &FockState, image: &FockState) -> Result<Rat> {
    let Some((m0, c0)) = s.terms.iter().next() else {
        return Ok(Rat::zero());
    };
    let lambda = image.coeff(m0) / c0;
    if *image == s.scale(&lambda) {
        Ok(lambda)
    } else {
        Err(Error::NonHomogeneous(s.pretty()))
    }
}

/// A conformal vector of the standard free-field shape
/// `½ Σ G⁻¹ᵢⱼ gᵢ_{−1} gⱼ_{−1} |0⟩ + w_{−2}|0⟩`, for which
/// `L_0 (modes · e^μ) = (level + ½(μ, μ) − (w, μ)) (modes · e^μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalVector {
    state: FockState,
    background: Vec<Rat>,
}

impl ConformalVector {
    /// Recognizes the standard shape; fails if the quadratic part is not
    /// `½ Σ G⁻¹ g g` or the state contains other terms.
    pub fn from_state(state: &FockState) -> Result<Self> {
        let space = state.space.clone();
        let n = space.dim();
        let mut background = vec![Rat::zero(); n];
        let mut rest = state.clone();
        for (m, c) in &state.terms {
            if m.momentum.iter().any(|x| !x.is_zero()) {
                return Err(Error::Domain("conformal vector carries momentum".into()));
            }
            if let [(g, 2)] = m.modes.as_slice() {
                background[*g] = c.clone();
                rest.add_term(m.clone(), -c.clone());
            }
        }
        let gram: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| space.gram(i, j).clone()).collect())
            .collect();
        let inv = invert_matrix(&gram)?;
        let mut quadratic = FockState::zero(space.clone());
        for i in 0..n {
            for j in 0..n {
                if inv[i][j].is_zero() {
                    continue;
                }
                quadratic.add_term(
                    Monomial {
                        momentum: vec![Rat::zero(); n],
                        modes: vec![(i, 1), (j, 1)],
                    },
                    &inv[i][j] * rat(1, 2),
                );
            }
        }
        if rest != quadratic {
            return Err(Error::Domain(
                "conformal vector is not of standard free-field shape".into(),
            ));
        }
        Ok(ConformalVector {
            state: state.clone(),
            background,
        })
    }

    /// The underlying state.
    pub fn state(&self) -> &FockState {
        &self.state
    }

    /// The background charge vector `w`.
    pub fn background(&self) -> &[Rat] {
        &self.background
    }

    /// Conformal weight of `e^μ`: `½(μ, μ) − (w, μ)`.
    pub fn momentum_weight(&self, mu: &[Rat]) -> Rat {
        let sp = &self.state.space;
        sp.pair_coeffs(mu, mu) * rat(1, 2) - sp.pair_coeffs(&self.background, mu)
    }

    /// Conformal weight of a monomial.
    pub fn monomial_weight(&self, m: &Monomial) -> Rat {
        self.momentum_weight(&m.momentum) + int(m.level() as i64)
    }

    /// Central charge `dim − 12 (w, w)`.
    pub fn central_charge(&self) -> Rat {
        let sp = &self.state.space;
        int(sp.dim() as i64) - int(12) * sp.pair_coeffs(&self.background, &self.background)
    }
}

/// Conformal weight of `s` in the module twisted by the spectral flow along
/// `x`: the weight of `e^x · s`, i.e. `Δ + (x, μ) + ½(x, x) − (x, w)`.
pub fn spectral_flow_weight(x: &[Rat], s: &FockState, l: &ConformalVector) -> Result<Rat> {
    let mut weight: Option<Rat> = None;
    for m in s.terms.keys() {
        let shifted: Vec<Rat> = m.momentum.iter().zip(x).map(|(a, b)| a + b).collect();
        let w = l.momentum_weight(&shifted) + int(m.level() as i64);
        match &weight {
            None => weight = Some(w),
            Some(w0) if *w0 != w => return Err(Error::NonHomogeneous(s.pretty())),
            _ => {}
        }
    }
    Ok(weight.unwrap_or_else(Rat::zero))
}

/// A lattice coset `offset + Σ ℤ·generators` of Fock modules in a space,
/// with a Cartan vector whose zero mode gives the h-grading.
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    /// Ambient space.
    pub space: Arc<QuadSpace>,
    /// Coset representative.
    pub offset: Vec<Rat>,
    /// Lattice generators of the momentum coset.
    pub generators: Vec<Vec<Rat>>,
    /// Vector `h` with h-weight `(h, μ)`.
    pub cartan: Vec<Rat>,
    /// Human-readable label.
    pub label: String,
}

impl ModuleSpec {
    /// h-weight of a momentum.
    pub fn h_weight(&self, mu: &[Rat]) -> Rat {
        self.space.pair_coeffs(&self.cartan, mu)
    }

    /// Momenta of the coset with the given h-weight and momentum weight at
    /// most `max_conf`, found by an expanding box search.
    pub fn momenta(&self, h: &Rat, max_conf: &Rat, l: &ConformalVector) -> Result<Vec<Vec<Rat>>> {
        let r = self.generators.len();
        let mut bound: i64 = 4;
        loop {
            let mut found = Vec::new();
            let mut on_boundary = false;
            let mut coords = vec![-bound; r];
            loop {
                let mut mu = self.offset.clone();
                for (c, g) in coords.iter().zip(&self.generators) {
                    for (m, gi) in mu.iter_mut().zip(g) {
                        *m += gi * int(*c);
                    }
                }
                if &self.h_weight(&mu) == h && &l.momentum_weight(&mu) <= max_conf {
                    if coords.iter().any(|c| c.abs() == bound) {
                        on_boundary = true;
                    }
                    found.push(mu);
                }
                let mut i = 0;
                loop {
                    if i == r {
                        break;
                    }
                    coords[i] += 1;
                    if coords[i] > bound {
                        coords[i] = -bound;
                        i += 1;
                    } else {
                        break;
                    }
                }
                if i == r {
                    break;
                }
            }
            if r == 0 {
                let mu = self.offset.clone();
                found.clear();
                if &self.h_weight(&mu) == h && &l.momentum_weight(&mu) <= max_conf {
                    found.push(mu);
                }
                return Ok(found);
            }
            if !on_boundary {
                found.sort();
                return Ok(found);
            }
            if bound >= 64 {
                return Err(Error::InfiniteComponent(format!(
                    "momenta of weight ≤ {} in {} are unbounded",
                    to_pretty(max_conf),
                    self.label
                )));
            }
            bound *= 2;
        }
    }
}

/// A monomial basis of one bigraded component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    /// h-weight of the component.
    pub h_weight: Rat,
    /// Conformal weight of the component.
    pub conf_weight: Rat,
    /// Basis monomials in canonical order.
    pub basis: Vec<Monomial>,
}

/// All mode multisets over `dim` generators with total level `n`.
pub fn mode_monomials(dim: usize, n: u32) -> Vec<Modes> {
    fn rec(dim: usize, rem: u32, min: (usize, u32), cur: &mut Modes, out: &mut Vec<Modes>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for g in min.0..dim {
            let start = if g == min.0 { min.1 } else { 1 };
            for l in start.max(1)..=rem {
                cur.push((g, l));
                rec(dim, rem - l, (g, l), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(dim, n, (0, 1), &mut Vec::new(), &mut out);
    out
}

/// Complete monomial basis of the component of h-weight `h` and conformal
/// weight `conf` of a module.
pub fn enumerate_graded(module: &ModuleSpec, h: &Rat, conf: &Rat, l: &ConformalVector) -> Result<GradedBasis> {
    let dim = module.space.dim();
    let mut basis = Vec::new();
    for mu in module.momenta(h, conf, l)? {
        let level = conf - l.momentum_weight(&mu);
        let Some(level) = to_i64(&level) else { continue };
        if level < 0 {
            continue;
        }
        for modes in mode_monomials(dim, level as u32) {
            basis.push(Monomial {
                momentum: mu.clone(),
                modes,
            });
        }
    }
    basis.sort();
    Ok(GradedBasis {
        h_weight: h.clone(),
        conf_weight: conf.clone(),
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heis(space: &Arc<QuadSpace>, name: &str, m: u32) -> FockState {
        FockState::generator(space.clone(), name, m).unwrap()
    }

    #[test]
    fn heisenberg_commutator() {
        let sp = QuadSpace::main(2);
        let a1 = heis(&sp, "a", 1);
        let g = sp.index_of("a").unwrap();
        assert_eq!(a1.mode(g, 1), FockState::vacuum(sp.clone()).scale(&rat(2, 2)));
        assert!(FockState::vacuum(sp).mode(g, 3).is_zero());
    }

    #[test]
    fn heisenberg_ope() {
        let sp = QuadSpace::rank_one("u");
        let u = heis(&sp, "u", 1);
        let prods = ope_singular(&u, &u, 3).unwrap();
        assert!(prods[0].is_zero());
        assert_eq!(prods[1], FockState::vacuum(sp.clone()));
        assert!(prods[2].is_zero());
        let normal = nth_product(&u, -1, &u).unwrap();
        assert_eq!(normal, heis(&sp, "u", 1).mode(0, -1));
    }

    #[test]
    fn vacuum_axiom() {
        let sp = QuadSpace::main(2);
        let b = FockState::exp(sp.clone(), vec![int(1), int(1), int(0)]);
        let vac = FockState::vacuum(sp);
        assert_eq!(nth_product(&vac, -1, &b).unwrap(), b);
        assert!(nth_product(&vac, 0, &b).unwrap().is_zero());
        assert_eq!(nth_product(&b, -1, &vac).unwrap(), b);
    }

    #[test]
    fn translation_matches_minus_two_product() {
        let sp = QuadSpace::main(2);
        let b = FockState::exp(sp.clone(), vec![int(1), int(0), int(2)]);
        let vac = FockState::vacuum(sp);
        assert_eq!(nth_product(&b, -2, &vac).unwrap(), b.translate());
    }

    #[test]
    fn mode_monomials_count_partitions() {
        assert_eq!(mode_monomials(1, 4).len(), 5);
        assert_eq!(mode_monomials(1, 2).len(), 2);
        assert_eq!(mode_monomials(3, 1).len(), 3);
        assert_eq!(mode_monomials(2, 0), vec![Vec::<(usize, u32)>::new()]);
    }
}
