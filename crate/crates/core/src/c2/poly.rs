//! Sparse commutative polynomials over ℚ in graded-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::arith::rat::{int, to_pretty, Rat};
use crate::error::{Error, Result};

/// Ordered variable names; the first variable is the largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    /// A ring with the given variables, largest first.
    pub fn new(names: &[&str]) -> Arc<Self> {
        Arc::new(PolyRing {
            names: names.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Number of variables.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// `true` for the ring with no variables.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Variable names.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of a variable.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

/// An exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    /// The unit monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Mono(vec![0; n])
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `true` if `self` divides `other`.
    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient(&self, other: &Mono) -> Mono {
        Mono(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    /// Product.
    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Least common multiple.
    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `true` if the supports are disjoint.
    pub fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial; the last key of `terms` is the leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A constant.
    pub fn constant(ring: &Arc<PolyRing>, c: Rat) -> Self {
        Self::term(ring, c, Mono::one(ring.len()))
    }

    /// The constant 1.
    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rat::one())
    }

    /// A single term.
    pub fn term(ring: &Arc<PolyRing>, c: Rat, m: Mono) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(m, c);
        p
    }

    /// The variable with the given name.
    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let i = ring.index_of(name)?;
        let mut m = Mono::one(ring.len());
        m.0[i] = 1;
        Ok(Self::term(ring, Rat::one(), m))
    }

    /// Ambient ring.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// `true` for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// `true` if there are no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial and coefficient.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Total degree (zero for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.leading().map_or(0, |(m, _)| m.degree())
    }

    /// `true` if all terms have the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Adds `c · m`.
    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Sum.
    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Poly {
        let mut out = Self::zero(&self.ring);
        if !c.is_zero() {
            for (m, v) in &self.terms {
                out.terms.insert(m.clone(), v * c);
            }
        }
        out
    }

    /// Product with the term `c · m`.
    pub fn mul_term(&self, c: &Rat, m: &Mono) -> Poly {
        let mut out = Self::zero(&self.ring);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.mul(m), v * c);
            }
        }
        out
    }

    /// Product.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &other.terms {
            for (k, v) in &self.terms {
                out.add_term(k.mul(m), v * c);
            }
        }
        out
    }

    /// `self^e`.
    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Self::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut k = m.clone();
                k.0[i] -= 1;
                out.add_term(k, c * int(m.0[i] as i64));
            }
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Substitutes `images[i]` (polynomials in `target`) for variable `i`.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Poly]) -> Poly {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    t = t.mul(&images[i].pow(*e));
                }
            }
            out = out.add(&t);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let a = c.abs();
            let vars: Vec<String> =
                m.0.iter()
                    .zip(self.ring.names())
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
                    .collect();
            if vars.is_empty() {
                write!(f, "{}", to_pretty(&a))?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", to_pretty(&a), vars.join("*"))?;
            }
        }
        Ok(())
    }
}
