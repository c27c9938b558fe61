//! Exact rational scalars.
//!
//! [`Rat`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. The helpers here add checked division, integer
//! powers and the `"num/den"` text form used by every JSON output.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
pub type Rat = BigRational;

/// Builds `n/d` in lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "rat: zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact quotient `a / b`, failing on a zero divisor.
pub fn checked_div(a: &Rat, b: &Rat) -> Result<Rat> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Integer power `a^e`; negative exponents require `a != 0`.
pub fn pow(a: &Rat, e: i64) -> Result<Rat> {
    if e < 0 {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = a.recip();
        return Ok(num_traits::pow(inv, (-e) as usize));
    }
    Ok(num_traits::pow(a.clone(), e as usize))
}

/// `true` when `a` is an integer.
pub fn is_integer(a: &Rat) -> bool {
    a.denom().is_one()
}

/// The integer value of `a` if it is an integer that fits in `i64`.
pub fn to_i64(a: &Rat) -> Option<i64> {
    if is_integer(a) {
        a.numer().to_i64()
    } else {
        None
    }
}

/// Greatest integer not exceeding `a`.
pub fn floor_i64(a: &Rat) -> i64 {
    a.floor().numer().to_i64().expect("floor out of i64 range")
}

/// Least integer not below `a`.
pub fn ceil_i64(a: &Rat) -> i64 {
    a.ceil().numer().to_i64().expect("ceil out of i64 range")
}

/// Fractional part in `[0, 1)`.
pub fn frac(a: &Rat) -> Rat {
    a - a.floor()
}

/// `true` when `a - b` is an integer.
pub fn congruent_mod_one(a: &Rat, b: &Rat) -> bool {
    is_integer(&(a - b))
}

/// Canonical `"num/den"` text (the denominator is always printed).
pub fn to_text(a: &Rat) -> String {
    format!("{}/{}", a.numer(), a.denom())
}

/// Compact human form: integers without a denominator.
pub fn to_pretty(a: &Rat) -> String {
    if is_integer(a) {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Parses `"n"`, `"-n"` or `"n/d"`.
pub fn parse(text: &str) -> Result<Rat> {
    let t = text.trim();
    let bad = || Error::Parse {
        line: 1,
        column: 1,
        token: t.to_string(),
        message: "expected a rational number".to_string(),
    };
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Rat::from_integer(n))
    }
}

/// Binomial coefficient `C(n, k)` for any integer `n` and `k >= 0`.
pub fn binomial(n: i64, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc * int(n - i) / int(i + 1);
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

/// Least common multiple of the denominators of `values` (1 when empty).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Absolute value.
pub fn abs(a: &Rat) -> Rat {
    a.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_reduce() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(4, 8), rat(1, 2));
        assert_eq!(to_text(&rat(4, 8)), "1/2");
    }

    #[test]
    fn level_for_p_two() {
        let p = 2;
        assert_eq!(int(-2) + rat(1, p), rat(-3, 2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(pow(&int(0), -1), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_round_trip() {
        for v in [rat(-7, 3), int(0), int(5), rat(1, 12)] {
            assert_eq!(parse(&to_text(&v)).unwrap(), v);
        }
        assert!(parse("abc").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(-2, 2), int(3));
        assert_eq!(binomial(3, 5), int(0));
    }
}
