//! Truncated formal power series in `t` whose coefficients are
//! polynomials in `x`, just enough machinery to expand the exponential
//! generating functions used as construction oracles.

use num::One;

use crate::numbers::factorial;
use crate::poly::Poly;
use crate::rational::{big_to_rat, rat_int, Rational};

/// Series `sum_i coeffs[i] * t^i`, truncated after `t^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySeries {
    coeffs: Vec<Poly>,
}

impl PolySeries {
    pub fn zero(order: usize) -> Self {
        PolySeries {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = PolySeries::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Poly {
        &self.coeffs[i]
    }

    /// `x * (e^t - 1)` truncated: coefficient of `t^i` is `x / i!` for `i >= 1`.
    pub fn x_exp_minus_one(order: usize) -> Self {
        let mut s = PolySeries::zero(order);
        for (i, c) in s.coeffs.iter_mut().enumerate().skip(1) {
            *c = Poly::monomial(Rational::one() / big_to_rat(&factorial(i as u32)), 1);
        }
        s
    }

    pub fn mul(&self, rhs: &PolySeries) -> PolySeries {
        let order = self.order().min(rhs.order());
        let mut out = PolySeries::zero(order);
        for i in 0..=order {
            let mut acc = Poly::zero();
            for j in 0..=i {
                if !self.coeffs[j].is_zero() && !rhs.coeffs[i - j].is_zero() {
                    acc = acc + &self.coeffs[j] * &rhs.coeffs[i - j];
                }
            }
            out.coeffs[i] = acc;
        }
        out
    }

    fn add_scaled(&mut self, rhs: &PolySeries, scale: &Rational) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = &*a + b.scale(scale);
        }
    }

    /// `1/(1 - u)` as `sum_k u^k`; requires `u` to have no constant term
    /// so powers of `u` gain `t`-valuation and the sum terminates.
    pub fn geometric_sum(u: &PolySeries) -> PolySeries {
        assert!(u.coeffs[0].is_zero(), "series must have zero constant term");
        let order = u.order();
        let mut acc = PolySeries::one(order);
        let mut power = PolySeries::one(order);
        for _ in 1..=order {
            power = power.mul(u);
            acc.add_scaled(&power, &Rational::one());
        }
        acc
    }

    /// `-ln(1 - u)` as `sum_{k>=1} u^k / k`; same valuation requirement.
    pub fn neg_log_one_minus(u: &PolySeries) -> PolySeries {
        assert!(u.coeffs[0].is_zero(), "series must have zero constant term");
        let order = u.order();
        let mut acc = PolySeries::zero(order);
        let mut power = PolySeries::one(order);
        for k in 1..=order {
            power = power.mul(u);
            acc.add_scaled(&power, &(Rational::one() / rat_int(k as i64)));
        }
        acc
    }

    /// `n! * [t^n]` of the series.
    pub fn egf_coefficient(&self, n: usize) -> Poly {
        self.coeffs[n].scale(&big_to_rat(&factorial(n as u32)))
    }
}
