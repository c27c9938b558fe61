//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! An element is a dense coefficient vector in the power basis
//! `1, ζ, …, ζ^{φ(n)−1}`, always reduced modulo the n-th cyclotomic
//! polynomial so that equality is plain vector equality.

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use super::rat::{int, Rat};
use crate::error::{Error, Result};

/// Dense polynomial over ℚ, lowest degree first, no trailing zeros.
type Poly = Vec<Rat>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Poly, Poly) {
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![Rat::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quo[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quo);
    (quo, rem)
}

/// The n-th cyclotomic polynomial, monic, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Poly> {
    static CACHE: OnceLock<Mutex<Vec<Option<Arc<Poly>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![None; 129]));
    if let Some(Some(p)) = cache.lock().unwrap().get(n as usize) {
        return p.clone();
    }
    // x^n − 1 divided by Φ_d for every proper divisor d of n.
    let mut num: Poly = vec![Rat::zero(); n as usize + 1];
    num[0] = int(-1);
    num[n as usize] = int(1);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_divmod(&num, &phi_d).0;
        }
    }
    let out = Arc::new(num);
    let mut guard = cache.lock().unwrap();
    if (n as usize) < guard.len() {
        guard[n as usize] = Some(out.clone());
    }
    out
}

/// An element of ℚ(ζ_n) with ζ_n = e^{2πi/n}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<Rat>,
}

impl Cyclo {
    /// Degree φ(n) of the field.
    pub fn degree(order: u32) -> usize {
        cyclotomic_polynomial(order).len() - 1
    }

    fn from_poly(order: u32, mut p: Poly) -> Self {
        let phi = cyclotomic_polynomial(order);
        if p.len() >= phi.len() {
            p = poly_divmod(&p, &phi).1;
        }
        let deg = phi.len() - 1;
        p.resize(deg, Rat::zero());
        Cyclo { order, coeffs: p }
    }

    /// The zero element.
    pub fn zero(order: u32) -> Self {
        Cyclo {
            order,
            coeffs: vec![Rat::zero(); Self::degree(order)],
        }
    }

    /// The unit element.
    pub fn one(order: u32) -> Self {
        Self::from_rat(order, Rat::one())
    }

    /// A rational scalar embedded in the field.
    pub fn from_rat(order: u32, r: Rat) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = r;
        c
    }

    /// The integer `n` embedded in the field.
    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rat(order, int(n))
    }

    /// The primitive root ζ_n raised to any integer power.
    pub fn root_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut p = vec![Rat::zero(); e + 1];
        p[e] = Rat::one();
        Self::from_poly(order, p)
    }

    /// The order n of the ambient field.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coefficients, length φ(n).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// `true` for the zero element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `true` for the unit element.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value if the element lies in ℚ.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            Err(Error::OrderMismatch(self.order, other.order))
        } else {
            Ok(())
        }
    }

    /// Checked sum.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self + other)
    }

    /// Checked product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero cyclotomic element".into()));
        }
        // Extended Euclid: find s with s·a ≡ 1 modulo Φ_n.
        let phi: Poly = cyclotomic_polynomial(self.order).as_ref().clone();
        let mut a: Poly = self.coeffs.clone();
        trim(&mut a);
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rat::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because Φ_n is irreducible.
        let c = r0[0].clone();
        let s: Poly = s0.into_iter().map(|x| x / &c).collect();
        Ok(Self::from_poly(self.order, s))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &Rat) -> Self {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Human-readable form in the generator symbol `sym`.
    pub fn display_with(&self, sym: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => sym.to_string(),
                _ => format!("{sym}^{i}"),
            };
            let coeff = super::rat::to_pretty(&c.abs());
            let body = if mono.is_empty() {
                coeff
            } else if c.abs().is_one() {
                mono
            } else {
                format!("{coeff}*{mono}")
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            parts.push((sign, body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (sign, body)) in parts.into_iter().enumerate() {
            if i == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(if sign == "-" { " - " } else { " + " });
            }
            s.push_str(&body);
        }
        s
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("q"))
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("q"))
    }
}

impl std::ops::Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, o: &Cyclo) -> Cyclo {
        assert_eq!(self.order, o.order, "cyclotomic order mismatch");
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, o: &Cyclo) -> Cyclo {
        assert_eq!(self.order, o.order, "cyclotomic order mismatch");
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl std::ops::Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, o: &Cyclo) -> Cyclo {
        assert_eq!(self.order, o.order, "cyclotomic order mismatch");
        if self.coeffs.len() == 1 {
            return o.scale(&self.coeffs[0]);
        }
        Cyclo::from_poly(self.order, poly_mul(&self.coeffs, &o.coeffs))
    }
}
