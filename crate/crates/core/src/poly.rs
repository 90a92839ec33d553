//! Dense univariate polynomials over [`Rational`] with exact arithmetic,
//! calculus, affine composition, exact division and exact weighted
//! integration over [0, 1].
//!
//! The weighted integrals are monomial moment maps: each admissible
//! weight has a closed-form moment for `x^k`, so integration is a linear
//! pass over the coefficients. Nothing here is numeric; the float
//! quadrature used to cross-check these maps lives in the test suites.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numbers::harmonic;
use crate::rational::{rat_int, Rational};

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Invariant: the highest-index coefficient is nonzero. The zero
/// polynomial is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `a + b*x`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Poly::from_coeffs(vec![a, b])
    }

    /// Builds a polynomial, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// k-th formal derivative; `derivative(0)` is the identity.
    pub fn derivative(&self, k: u32) -> Poly {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..k {
            if coeffs.len() <= 1 {
                return Poly::zero();
            }
            coeffs = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect();
        }
        Poly::from_coeffs(coeffs)
    }

    /// `p(a + b*x)`, expanded exactly.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Poly {
        let arg = Poly::linear(a.clone(), b.clone());
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &arg + Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// A nonzero remainder is an error: inside the identity verifiers it
    /// signals that a closed form failed to clear its denominator.
    pub fn divide_exact(&self, divisor: &Poly) -> Result<Poly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Err(Error::NonzeroRemainder);
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / lead;
            for j in 0..dd {
                let delta = &q * &divisor.coeffs[j];
                rem[i - dd + j] -= delta;
            }
            rem[i] = Rational::zero();
            quot[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder);
        }
        Ok(Poly::from_coeffs(quot))
    }

    /// Exact `\int_0^1 p(x) dx = sum_k c_k / (k+1)`.
    pub fn integrate01(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c / rat_int(k as i64 + 1))
            .sum()
    }

    /// Exact `\int_0^1 (1-x)/x * p(x) dx`.
    ///
    /// The weight is singular at 0, so `p` must have zero constant term;
    /// the monomial moment is `1/k - 1/(k+1)`.
    pub fn integrate01_weight_geometric(&self) -> Result<Rational> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NonvanishingAtZero);
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * (rat_int(1) / rat_int(k as i64) - rat_int(1) / rat_int(k as i64 + 1)))
            .sum())
    }

    /// Exact `\int_0^1 ln(1-x)/x * p(x) dx`.
    ///
    /// Requires a zero constant term; the monomial moment is `-H_k / k`.
    pub fn integrate01_weight_log_over_x(&self) -> Result<Rational> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NonvanishingAtZero);
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| -(c * harmonic(k as u32)) / rat_int(k as i64))
            .sum())
    }

    /// Exact `\int_0^1 ln(1-x)/(1-x) * p(x) dx`.
    ///
    /// Requires `p(1) = 0`. Substituting `y = 1-x` turns this into the
    /// `ln(y)/y` weight, whose monomial moment is `-1/k^2`.
    pub fn integrate01_weight_log_over_1mx(&self) -> Result<Rational> {
        if !self.eval(&Rational::one()).is_zero() {
            return Err(Error::NonvanishingAtOne);
        }
        let reflected = self.compose_affine(&Rational::one(), &rat_int(-1));
        debug_assert!(reflected.coeff(0).is_zero());
        Ok(reflected
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| -c / rat_int((k * k) as i64))
            .sum())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add, add; Sub, sub; Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Canonical text form: ascending powers, zero terms skipped, unit
/// coefficients elided, e.g. `x + 3*x^2` or `1 - 2*x`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
