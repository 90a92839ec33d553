//! Geometric polynomials `w_n`, their higher-order generalization
//! `w_n^{(p)}`, closed forms for their derivatives, and the reflection,
//! convolution and raising identities.
//!
//! Identity operations return both sides as polynomials instead of a
//! boolean so callers can print the counterexample when a side differs.

use num::One;

use crate::error::Result;
use crate::numbers::{binomial, factorial, rising_factorial, stirling1_unsigned, stirling2};
use crate::poly::Poly;
use crate::power_series::PolySeries;
use crate::rational::{big_to_rat, rat_int, Rational};

/// `w_n(x) = sum_k S(n,k) k! x^k`, with `w_0 = 1`.
pub fn geometric(n: u32) -> Poly {
    let coeffs = (0..=n)
        .map(|k| big_to_rat(&(stirling2(n, k) * factorial(k))))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `w_n` recovered from its exponential generating function
/// `1/(1 - x(e^t - 1))` by truncated series expansion. Construction
/// oracle: must agree with [`geometric`].
pub fn geometric_via_egf(n: u32) -> Poly {
    let u = PolySeries::x_exp_minus_one(n as usize);
    PolySeries::geometric_sum(&u).egf_coefficient(n as usize)
}

/// Order-p geometric polynomial
/// `w_n^{(p)}(x) = sum_k S(n,k) p(p+1)...(p+k-1) x^k`, `p >= 1`.
///
/// Defined directly by the rising-factorial sum, which expands the
/// order-p generating function `1/(1 - x(e^t-1))^p`; the reduction to
/// plain geometric polynomials is then an independently tested identity
/// rather than the definition. `w_n^{(1)} = w_n`.
pub fn geometric_order(n: u32, p: u32) -> Poly {
    assert!(p >= 1, "order must be positive");
    let coeffs = (0..=n)
        .map(|k| big_to_rat(&(stirling2(n, k) * rising_factorial(p, k))))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Closed form for `d^k/dx^k w_n` as a binomial-Stirling combination of
/// geometric polynomials over `(1+x)^k`:
///
/// `(1+x)^k (d^k w_n) = k! sum_{m=k..n} sum_{j=0..k} C(n,m) S(m,k) c(k+1,j+1) w_{n-m+j}`.
///
/// The division by `(1+x)^k` must be exact; a nonzero remainder would
/// falsify the closed form and is surfaced as an error.
pub fn gp_derivative_closed_form(n: u32, k: u32) -> Result<Poly> {
    assert!(k >= 1);
    let mut acc = Poly::zero();
    for m in k..=n {
        let outer = binomial(n, m as i64) * stirling2(m, k);
        for j in 0..=k {
            let c = &outer * stirling1_unsigned(k + 1, j + 1);
            acc = acc + geometric(n - m + j).scale(&big_to_rat(&c));
        }
    }
    acc = acc.scale(&big_to_rat(&factorial(k)));
    let divisor = Poly::linear(Rational::one(), Rational::one()).pow(k);
    acc.divide_exact(&divisor)
}

/// Closed form for `d^k/dx^k w_n` through higher-order geometric
/// polynomials:
///
/// `(k!)^2 sum_{m=k..n} C(n,m) S(m,k) w_{n-m}^{(k+1)}`.
pub fn gp_derivative_via_higher_order(n: u32, k: u32) -> Poly {
    assert!(k >= 1);
    let mut acc = Poly::zero();
    for m in k..=n {
        let c = binomial(n, m as i64) * stirling2(m, k);
        acc = acc + geometric_order(n - m, k + 1).scale(&big_to_rat(&c));
    }
    let kfac = factorial(k);
    acc.scale(&big_to_rat(&(&kfac * &kfac)))
}

/// Reduction of the order-(p+1) geometric polynomial to plain ones, with
/// the `(1+x)^p` denominator cleared:
///
/// lhs `= p! (1+x)^p w_n^{(p+1)}`, rhs `= sum_{k=0..p} c(p+1,k+1) w_{n+k}`.
pub fn higher_order_reduction_pair(n: u32, p: u32) -> (Poly, Poly) {
    assert!(p >= 1);
    let one_plus_x = Poly::linear(Rational::one(), Rational::one());
    let lhs = (one_plus_x.pow(p) * geometric_order(n, p + 1)).scale(&big_to_rat(&factorial(p)));
    let mut rhs = Poly::zero();
    for k in 0..=p {
        rhs = rhs + geometric(n + k).scale(&big_to_rat(&stirling1_unsigned(p + 1, k + 1)));
    }
    (lhs, rhs)
}

/// Reflection identity with the `1/x` cleared, for `n >= 1`:
/// lhs `= x * w_n(-x-1)`, rhs `= (-1)^n (x+1) w_n(x)`.
pub fn gp_reflection_pair(n: u32) -> (Poly, Poly) {
    assert!(n >= 1);
    let w = geometric(n);
    let lhs = Poly::x() * w.compose_affine(&rat_int(-1), &rat_int(-1));
    let mut rhs = Poly::linear(Rational::one(), Rational::one()) * w;
    if n % 2 == 1 {
        rhs = -rhs;
    }
    (lhs, rhs)
}

/// Binomial convolution identity:
/// lhs `= (1+x) sum_k C(n,k) w_k w_{n-k}`, rhs `= w_{n+1} + w_n`.
pub fn gp_convolution_pair(n: u32) -> (Poly, Poly) {
    let mut sum = Poly::zero();
    for k in 0..=n {
        let prod = geometric(k) * geometric(n - k);
        sum = sum + prod.scale(&big_to_rat(&binomial(n, k as i64)));
    }
    let lhs = Poly::linear(Rational::one(), Rational::one()) * sum;
    let rhs = geometric(n + 1) + geometric(n);
    (lhs, rhs)
}

/// Raising identity: lhs `= x * d/dx((1+x) w_n)`, rhs `= w_{n+1}`.
pub fn gp_raising_pair(n: u32) -> (Poly, Poly) {
    let product = Poly::linear(Rational::one(), Rational::one()) * geometric(n);
    let lhs = Poly::x() * product.derivative(1);
    (lhs, geometric(n + 1))
}
