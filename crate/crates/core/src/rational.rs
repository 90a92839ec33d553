//! The exact scalar type and small construction helpers.
//!
//! Every quantity in this crate is carried by [`Rational`], an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator (both guaranteed by `num-rational`).

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// An integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big_to_rat(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// `n^k` for a nonnegative base exponent, with the `0^0 = 1` convention.
pub fn int_pow(n: u64, k: u32) -> BigInt {
    if k == 0 {
        BigInt::one()
    } else {
        BigInt::from(n).pow(k)
    }
}

/// `x^k` for a nonnegative exponent.
pub fn rat_pow(x: &Rational, k: u32) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let mut acc = x.clone();
    for _ in 1..k {
        acc *= x;
    }
    acc
}

/// Parses the wire format `"p/q"` (or a bare integer `"p"`).
///
/// Unlike `BigRational::from_str`, a zero denominator is reported as an
/// error instead of a panic.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| Error::domain(format!("cannot parse rational {s:?}")))?;
    let den: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| Error::domain(format!("cannot parse rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::domain(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Lossy conversion to `f64` that survives numerators and denominators
/// wider than the `f64` mantissa.
pub fn rat_to_f64(x: &Rational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back on a sign-aware bit-shift of both parts.
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    let (mut n, mut d) = (x.numer().abs(), x.denom().clone());
    let shift = (n.bits().max(d.bits()) as i64 - 900).max(0) as u64;
    n >>= shift;
    d >>= shift;
    if d.sign() == Sign::NoSign {
        return sign * f64::INFINITY;
    }
    sign * n.to_f64().unwrap_or(f64::INFINITY) / d.to_f64().unwrap_or(f64::INFINITY)
}

/// `|x| < 1`, the disk of convergence for every series in this crate.
pub fn in_unit_disk(x: &Rational) -> bool {
    x.abs() < Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_wire_format() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-2/3").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_is_wire_format() {
        assert_eq!(rat(1, 2).to_string(), "1/2");
        assert_eq!(rat(-1, 2).to_string(), "-1/2");
        assert_eq!(rat_int(5).to_string(), "5");
        assert_eq!(rat(6, 3).to_string(), "2");
    }

    #[test]
    fn f64_conversion_handles_wide_values() {
        let big = Rational::new(BigInt::from(10).pow(400u32), BigInt::from(10).pow(399u32));
        assert!((rat_to_f64(&big) - 10.0).abs() < 1e-9);
        assert!((rat_to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
