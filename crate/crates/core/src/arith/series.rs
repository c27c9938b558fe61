//! Truncated formal series in `q` with Laurent coefficients in `z` and `w`.
//!
//! A [`BiSeries`] stores finitely many terms `c · q^a z^b w^k` with rational
//! `a` and `b` (z is measured in units of the fundamental weight, so
//! `z^α = z^2`) and integral `k`. Two bounds describe which coefficients are
//! exact:
//!
//! * every coefficient with q-exponent below `q_order` is exact;
//! * if `z_floor` is set, only coefficients with z-exponent at or above it
//!   are exact. Series expanded in decreasing powers of `z` (such as
//!   `1/(1 − z^{-2})`) carry such a floor; polynomial data carries none.
//!
//! All q-exponents of one series are congruent modulo 1.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::rat::{congruent_mod_one, int, to_text, Rat};
use crate::error::{Error, Result};

/// Exponent triple `(q, z, w)` of a term.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exps {
    /// Power of q.
    pub q: Rat,
    /// Power of z in fundamental-weight units.
    pub z: Rat,
    /// Power of the auxiliary variable w.
    pub w: i64,
}

impl Exps {
    /// Builds an exponent triple.
    pub fn new(q: Rat, z: Rat, w: i64) -> Self {
        Exps { q, z, w }
    }
}

/// Truncated bigraded series; see the module documentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    terms: BTreeMap<Exps, Rat>,
    q_order: Rat,
    z_floor: Option<Rat>,
    window: Option<(i64, i64)>,
    has_w: bool,
}

/// First coefficient at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// q-exponent as `"num/den"`.
    pub q: String,
    /// z-exponent as `"num/den"`.
    pub z: String,
    /// w-exponent.
    pub w: i64,
    /// Left coefficient.
    pub left: String,
    /// Right coefficient.
    pub right: String,
}

fn max_opt(a: Option<Rat>, b: Option<Rat>) -> Option<Rat> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x > y { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

impl BiSeries {
    /// The zero series, exact below `q_order`.
    pub fn zero(q_order: Rat) -> Self {
        BiSeries {
            terms: BTreeMap::new(),
            q_order,
            z_floor: None,
            window: None,
            has_w: false,
        }
    }

    /// The constant series 1.
    pub fn one(q_order: Rat) -> Self {
        Self::monomial(Rat::one(), Rat::zero(), Rat::zero(), 0, q_order)
    }

    /// A single term `c · q^qe z^ze w^we`.
    pub fn monomial(c: Rat, qe: Rat, ze: Rat, we: i64, q_order: Rat) -> Self {
        let mut s = Self::zero(q_order);
        s.has_w = we != 0;
        if !c.is_zero() && qe < s.q_order {
            s.terms.insert(Exps::new(qe, ze, we), c);
        }
        s
    }

    /// Builds a series from explicit terms; fails if q-exponents are not
    /// congruent modulo 1.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, Rat)>, q_order: Rat) -> Result<Self> {
        let mut s = Self::zero(q_order);
        for (e, c) in terms {
            s.add_term(e, c)?;
        }
        Ok(s)
    }

    /// Adds `c` to the coefficient at `e` (ignored at or beyond `q_order`).
    pub fn add_term(&mut self, e: Exps, c: Rat) -> Result<()> {
        if c.is_zero() || e.q >= self.q_order {
            return Ok(());
        }
        if let Some(first) = self.terms.keys().next() {
            if !congruent_mod_one(&first.q, &e.q) {
                return Err(Error::IncompatibleSeries(format!(
                    "q-exponents {} and {} are not congruent mod 1",
                    first.q, e.q
                )));
            }
        }
        if e.w != 0 {
            self.has_w = true;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
        Ok(())
    }

    /// Stored terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rat)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// `true` if no term is stored.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exclusive q-truncation bound.
    pub fn q_order(&self) -> &Rat {
        &self.q_order
    }

    /// Lowest exact z-exponent, if the series is truncated in z.
    pub fn z_floor(&self) -> Option<&Rat> {
        self.z_floor.as_ref()
    }

    /// Window recorded by the last [`BiSeries::clip`].
    pub fn window(&self) -> Option<(i64, i64)> {
        self.window
    }

    /// `true` if some term carries a nonzero w-exponent.
    pub fn has_w(&self) -> bool {
        self.has_w
    }

    /// Coefficient at the given exponents (zero if absent).
    pub fn coeff(&self, q: &Rat, z: &Rat, w: i64) -> Rat {
        self.terms
            .get(&Exps::new(q.clone(), z.clone(), w))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Lowest stored q-exponent, or `q_order` for an empty series.
    pub fn valuation(&self) -> Rat {
        self.terms
            .keys()
            .map(|e| e.q.clone())
            .min()
            .unwrap_or_else(|| self.q_order.clone())
    }

    /// Upper bound for every z-exponent that may occur, known or not.
    fn top_z(&self) -> Option<Rat> {
        let stored = self.terms.keys().map(|e| e.z.clone()).max();
        max_opt(stored, self.z_floor.clone())
    }

    fn congruence_ok(&self, other: &Self) -> Result<()> {
        if let (Some(a), Some(b)) = (self.terms.keys().next(), other.terms.keys().next()) {
            if !congruent_mod_one(&a.q, &b.q) {
                return Err(Error::IncompatibleSeries(format!(
                    "cannot add series with q-exponents {} and {}",
                    a.q, b.q
                )));
            }
        }
        Ok(())
    }

    fn windows_meet(&self, other: &Self) -> Result<Option<(i64, i64)>> {
        match (self.window, other.window) {
            (Some((a, b)), Some((c, d))) => {
                let lo = a.max(c);
                let hi = b.min(d);
                if lo > hi {
                    Err(Error::IncompatibleSeries(format!(
                        "disjoint windows [{a},{b}] and [{c},{d}]"
                    )))
                } else {
                    Ok(Some((lo, hi)))
                }
            }
            (w, None) | (None, w) => Ok(w),
        }
    }

    /// Drops terms the current bounds do not certify.
    fn prune(&mut self) {
        let order = self.q_order.clone();
        let floor = self.z_floor.clone();
        let window = self.window;
        self.terms.retain(|e, _| {
            e.q < order
                && floor.as_ref().is_none_or(|f| &e.z >= f)
                && window.is_none_or(|(lo, hi)| e.z >= int(lo) && e.z <= int(hi))
        });
    }

    /// Sum of two series.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Rat::one())
    }

    /// Difference of two series.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &int(-1))
    }

    fn combine(&self, other: &Self, sign: &Rat) -> Result<Self> {
        self.congruence_ok(other)?;
        let window = self.windows_meet(other)?;
        let mut out = BiSeries {
            terms: self.terms.clone(),
            q_order: self.q_order.clone().min(other.q_order.clone()),
            z_floor: max_opt(self.z_floor.clone(), other.z_floor.clone()),
            window,
            has_w: self.has_w || other.has_w,
        };
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c * sign;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Product of two series, exact wherever both factors allow.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let window = self.windows_meet(other)?;
        let order_a = &self.q_order + other.valuation();
        let order_b = &other.q_order + self.valuation();
        let q_order = order_a.min(order_b);
        let floor_a = match (&self.z_floor, other.top_z()) {
            (Some(f), Some(t)) => Some(f + t),
            _ => None,
        };
        let floor_b = match (&other.z_floor, self.top_z()) {
            (Some(f), Some(t)) => Some(f + t),
            _ => None,
        };
        let z_floor = max_opt(floor_a, floor_b);
        let mut terms: BTreeMap<Exps, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let q = &ea.q + &eb.q;
                if q >= q_order {
                    continue;
                }
                let z = &ea.z + &eb.z;
                if z_floor.as_ref().is_some_and(|f| &z < f) {
                    continue;
                }
                let key = Exps::new(q, z, ea.w + eb.w);
                let entry = terms.entry(key.clone()).or_insert_with(Rat::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&key);
                }
            }
        }
        let mut out = BiSeries {
            terms,
            q_order,
            z_floor,
            window,
            has_w: self.has_w || other.has_w,
        };
        out.prune();
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
        } else {
            for v in out.terms.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// Multiplies by the monomial `q^dq z^dz w^dw`.
    pub fn shift(&self, dq: &Rat, dz: &Rat, dw: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (Exps::new(&e.q + dq, &e.z + dz, e.w + dw), c.clone()))
            .collect();
        BiSeries {
            terms,
            q_order: &self.q_order + dq,
            z_floor: self.z_floor.as_ref().map(|f| f + dz),
            window: None,
            has_w: self.has_w || dw != 0,
        }
    }

    /// Lowers the q-truncation bound.
    pub fn truncate(&self, q_order: &Rat) -> Self {
        let mut out = self.clone();
        if q_order < &out.q_order {
            out.q_order = q_order.clone();
        }
        out.prune();
        out
    }

    /// Restricts to `lo ≤ z ≤ hi`; fails if the series is not exact down to `lo`.
    pub fn clip(&self, lo: i64, hi: i64) -> Result<Self> {
        if let Some(f) = &self.z_floor {
            if f > &int(lo) {
                return Err(Error::IncompatibleSeries(format!(
                    "series is exact only for z ≥ {f}, window starts at {lo}"
                )));
            }
        }
        let mut out = self.clone();
        out.window = Some(match self.window {
            Some((a, b)) => (a.max(lo), b.min(hi)),
            None => (lo, hi),
        });
        out.prune();
        Ok(out)
    }

    /// Inverse, expanding any non-monomial lowest q-level in decreasing
    /// powers of `z` down to `z_floor`.
    ///
    /// When the lowest q-level is a single monomial the result needs no
    /// floor and `z_floor` is ignored.
    pub fn inv(&self, z_floor: Option<&Rat>) -> Result<Self> {
        if self.z_floor.is_some() {
            return Err(Error::NotInvertible("series truncated in z cannot be inverted".into()));
        }
        let v = self.valuation();
        if v >= self.q_order {
            return Err(Error::NotInvertible("series is zero to its order".into()));
        }
        let lowest: Vec<(Exps, Rat)> = self
            .terms
            .iter()
            .filter(|(e, _)| e.q == v)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        let head = BiSeries::from_terms(lowest.iter().cloned(), self.q_order.clone())?;
        let head_inv = if lowest.len() == 1 {
            let (e, c) = &lowest[0];
            BiSeries::monomial(c.recip(), -e.q.clone(), -e.z.clone(), -e.w, &self.q_order - &v - &v)
        } else {
            let floor = z_floor.ok_or_else(|| {
                Error::NotInvertible(
                    "leading q-level is not a monomial; choose the z-expansion region \
                     by supplying a z floor"
                        .into(),
                )
            })?;
            head.inv_z_down(floor, &(&self.q_order - &v - &v))?
        };
        // self = head·(1 + X) with X = head⁻¹·(self − head) of positive q-order.
        let rest = self.sub(&head)?;
        let rel_order = &self.q_order - &v;
        let neg_x = head_inv.mul(&rest)?.truncate(&rel_order).scale(&int(-1));
        let mut sum = BiSeries::one(rel_order.clone());
        if !neg_x.is_empty() {
            let step = neg_x.valuation();
            let rounds = (&rel_order / &step).ceil();
            let mut power = BiSeries::one(rel_order.clone());
            let mut k = Rat::zero();
            while k < rounds {
                power = power.mul(&neg_x)?;
                sum = sum.add(&power)?;
                k += Rat::one();
            }
        }
        head_inv.mul(&sum)
    }

    /// Inverse of a single q-level whose top z-term is a unit, expanded in
    /// decreasing powers of `z` and exact for `z ≥ floor`.
    fn inv_z_down(&self, floor: &Rat, q_order: &Rat) -> Result<Self> {
        let top = self
            .terms
            .iter()
            .max_by(|a, b| a.0.z.cmp(&b.0.z).then(a.0.w.cmp(&b.0.w)))
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or_else(|| Error::NotInvertible("empty level".into()))?;
        let (te, tc) = top;
        if self.terms.keys().any(|e| e.z == te.z && e.w != te.w) {
            return Err(Error::NotInvertible("top z-level is not a single monomial".into()));
        }
        // self = tc·q^a z^b w^k · (1 + Y) with Y of strictly negative z-degree.
        let unit_inv_c = tc.recip();
        let normalized = self.shift(&-te.q.clone(), &-te.z.clone(), -te.w).scale(&unit_inv_c);
        let y = normalized.sub(&BiSeries::one(normalized.q_order.clone()))?;
        let inner_floor = floor + &te.z;
        let rel_order = q_order + &te.q;
        let neg_y = y.scale(&int(-1));
        let mut sum = BiSeries::one(rel_order.clone());
        let mut power = sum.clone();
        loop {
            power = power.mul(&neg_y)?;
            power.z_floor = Some(inner_floor.clone());
            power.prune();
            if power.is_empty() {
                break;
            }
            sum = sum.add(&power)?;
        }
        sum.z_floor = Some(inner_floor);
        sum.prune();
        Ok(sum
            .truncate(&rel_order)
            .shift(&-te.q.clone(), &-te.z.clone(), -te.w)
            .scale(&unit_inv_c))
    }

    /// Constant term in `w`.
    pub fn ct_w(&self) -> Self {
        let mut out = self.clone();
        out.terms.retain(|e, _| e.w == 0);
        out.has_w = false;
        out
    }

    /// Specialization `w = 1`.
    pub fn at_w_one(&self) -> Self {
        let mut out = BiSeries {
            terms: BTreeMap::new(),
            q_order: self.q_order.clone(),
            z_floor: self.z_floor.clone(),
            window: self.window,
            has_w: false,
        };
        for (e, c) in &self.terms {
            let key = Exps::new(e.q.clone(), e.z.clone(), 0);
            let entry = out.terms.entry(key.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(&key);
            }
        }
        out
    }

    /// Compares two series on the region where both are exact, restricted to
    /// `lo ≤ z ≤ hi`. Returns the first disagreement in canonical order.
    pub fn first_difference(&self, other: &Self, lo: i64, hi: i64) -> Result<Option<Discrepancy>> {
        for f in [&self.z_floor, &other.z_floor].into_iter().flatten() {
            if f > &int(lo) {
                return Err(Error::IncompatibleSeries(format!(
                    "comparison window starts at {lo} but a series is exact only for z ≥ {f}"
                )));
            }
        }
        let order = self.q_order.clone().min(other.q_order.clone());
        let in_range = |e: &Exps| e.q < order && e.z >= int(lo) && e.z <= int(hi);
        let mut keys: Vec<&Exps> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|e| in_range(e))
            .collect();
        keys.sort();
        keys.dedup();
        for e in keys {
            let a = self.terms.get(e).cloned().unwrap_or_else(Rat::zero);
            let b = other.terms.get(e).cloned().unwrap_or_else(Rat::zero);
            if a != b {
                return Ok(Some(Discrepancy {
                    q: to_text(&e.q),
                    z: to_text(&e.z),
                    w: e.w,
                    left: to_text(&a),
                    right: to_text(&b),
                }));
            }
        }
        Ok(None)
    }

    /// JSON form: `{"terms":[{"q","z","w"?,"c"}], "qOrder", "zWindow"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut m = serde_json::Map::new();
                m.insert("q".into(), to_text(&e.q).into());
                m.insert("z".into(), to_text(&e.z).into());
                if self.has_w {
                    m.insert("w".into(), e.w.into());
                }
                m.insert("c".into(), to_text(c).into());
                serde_json::Value::Object(m)
            })
            .collect();
        let window = self.window.map(|(a, b)| vec![a, b]);
        serde_json::json!({
            "terms": terms,
            "qOrder": to_text(&self.q_order),
            "zWindow": window,
        })
    }

    /// Human-readable form, terms in canonical order.
    pub fn pretty(&self) -> String {
        use super::rat::to_pretty;
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            s.push_str(&to_pretty(&c.abs()));
            if !e.q.is_zero() {
                s.push_str(&format!("*q^({})", to_pretty(&e.q)));
            }
            if !e.z.is_zero() {
                s.push_str(&format!("*z^({})", to_pretty(&e.z)));
            }
            if e.w != 0 {
                s.push_str(&format!("*w^({})", e.w));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    fn q_poly(coeffs: &[i64], order: i64) -> BiSeries {
        BiSeries::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Exps::new(int(i as i64), int(0), 0), int(*c))),
            int(order),
        )
        .unwrap()
    }

    #[test]
    fn truncated_product() {
        let a = q_poly(&[1, -1], 3);
        let b = q_poly(&[1, 1, 1], 3);
        let p = a.mul(&b).unwrap();
        assert_eq!(p, q_poly(&[1], 3));
    }

    #[test]
    fn z_cancellation() {
        let a = BiSeries::monomial(int(1), int(0), int(1), 0, int(2));
        let b = BiSeries::monomial(int(1), int(0), int(-1), 0, int(2));
        assert_eq!(a.mul(&b).unwrap(), BiSeries::one(int(2)));
    }

    #[test]
    fn geometric_inverse() {
        let a = q_poly(&[1, -1], 4);
        assert_eq!(a.inv(None).unwrap(), q_poly(&[1, 1, 1, 1], 4));
    }

    #[test]
    fn z_down_inverse() {
        // 1/(1 − z^{-2}) = 1 + z^{-2} + z^{-4} + … exact down to the floor.
        let a = BiSeries::from_terms(
            [
                (Exps::new(int(0), int(0), 0), int(1)),
                (Exps::new(int(0), int(-2), 0), int(-1)),
            ],
            int(3),
        )
        .unwrap();
        assert!(a.inv(None).is_err());
        let inv = a.inv(Some(&int(-6))).unwrap();
        assert_eq!(inv.z_floor(), Some(&int(-6)));
        for k in [0, -2, -4, -6] {
            assert_eq!(inv.coeff(&int(0), &int(k), 0), int(1));
        }
        let back = a.mul(&inv).unwrap();
        assert!(back.first_difference(&BiSeries::one(int(3)), -4, 4).unwrap().is_none());
    }

    #[test]
    fn congruence_is_enforced() {
        let a = BiSeries::monomial(int(1), rat(1, 2), int(0), 0, int(3));
        let b = BiSeries::monomial(int(1), int(0), int(0), 0, int(3));
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_ok());
    }

    #[test]
    fn constant_term_in_w() {
        let s = BiSeries::from_terms(
            [
                (Exps::new(int(0), int(0), 1), int(1)),
                (Exps::new(int(0), int(0), 0), int(3)),
                (Exps::new(int(0), int(0), -1), int(1)),
            ],
            int(1),
        )
        .unwrap();
        assert_eq!(s.ct_w(), BiSeries::monomial(int(3), int(0), int(0), 0, int(1)));
    }
}
