//! Harmonic geometric polynomials: the defining Stirling-harmonic sum,
//! four alternative constructions in terms of plain geometric
//! polynomials, a generating-function oracle, and the reflection,
//! recurrence and convolution identities tying the family together.

use num::{One, Zero};

use crate::error::Result;
use crate::geometric::geometric;
use crate::numbers::{binomial, factorial, harmonic, stirling1_unsigned, stirling2};
use crate::poly::Poly;
use crate::power_series::PolySeries;
use crate::rational::{big_to_rat, rat_int, Rational};

fn one_plus_x() -> Poly {
    Poly::linear(Rational::one(), Rational::one())
}

/// `hw_n(x) = sum_{k=1..n} S(n,k) k! H_k x^k`, with `hw_0 = 0`.
pub fn hgp(n: u32) -> Poly {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for k in 1..=n {
        coeffs[k as usize] = big_to_rat(&(stirling2(n, k) * factorial(k))) * harmonic(k);
    }
    Poly::from_coeffs(coeffs)
}

/// `hw_n` recovered from its exponential generating function
/// `-ln(1 - x(e^t-1)) / (1 - x(e^t-1))` by truncated series expansion.
/// Construction oracle: must agree with [`hgp`].
pub fn hgp_via_egf(n: u32) -> Poly {
    let u = PolySeries::x_exp_minus_one(n as usize);
    let log = PolySeries::neg_log_one_minus(&u);
    let inv = PolySeries::geometric_sum(&u);
    log.mul(&inv).egf_coefficient(n as usize)
}

/// `hw_m` as a binomial convolution of geometric polynomials:
///
/// `(1 + x - m) w_{m-1} + (1+x) sum_{k=1..m-1} C(m,k) w_{k-1} w_{m-k}`,
///
/// for `m >= 1`; the empty sum at `m = 1` reproduces `hw_1 = x`.
pub fn hgp_via_gp_products(m: u32) -> Poly {
    assert!(m >= 1);
    let head = Poly::linear(rat_int(1 - m as i64), Rational::one()) * geometric(m - 1);
    let mut sum = Poly::zero();
    for k in 1..m {
        let prod = geometric(k - 1) * geometric(m - k);
        sum = sum + prod.scale(&big_to_rat(&binomial(m, k as i64)));
    }
    head + one_plus_x() * sum
}

/// `hw_n` from the triple Stirling sum over `(x/(1+x))^k`, with the
/// common denominator `(1+x)^n` cleared and divided out exactly:
///
/// `sum_{l,k,j} (-1)^{k+1}/k C(n,l) S(n-l,k) c(k+1,j+1) w_{l+j} x^k (1+x)^{n-k} / (1+x)^n`.
///
/// A nonzero remainder in the final division is surfaced as an error; it
/// would mean the representation fails.
pub fn hgp_via_stirling_triple_sum(n: u32) -> Result<Poly> {
    assert!(n >= 1);
    let base = one_plus_x();
    let base_powers: Vec<Poly> = (0..=n).map(|i| base.pow(i)).collect();
    let mut numerator = Poly::zero();
    for l in 0..=n {
        let choose = binomial(n, l as i64);
        for k in 1..=(n - l) {
            let s2 = stirling2(n - l, k);
            if s2 == 0u32.into() {
                continue;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let outer = big_to_rat(&(&choose * s2)) * Rational::new(sign.into(), k.into());
            let tail = Poly::monomial(Rational::one(), k as usize) * &base_powers[(n - k) as usize];
            for j in 0..=k {
                let weight = &outer * big_to_rat(&stirling1_unsigned(k + 1, j + 1));
                numerator = numerator + (geometric(l + j) * &tail).scale(&weight);
            }
        }
    }
    numerator.divide_exact(&base_powers[n as usize])
}

/// `hw_n` from the alternating derivative sum
/// `sum_{k=1..n} (-1)^{k+1} x^k / (k * k!) * d^k/dx^k w_n`.
pub fn hgp_via_gp_derivatives(n: u32) -> Poly {
    assert!(n >= 1);
    let w = geometric(n);
    let mut acc = Poly::zero();
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let scale = Rational::new(sign.into(), num::BigInt::from(k) * factorial(k));
        let term = Poly::monomial(scale, k as usize) * w.derivative(k);
        acc = acc + term;
    }
    acc
}

/// `hw_{m+1}` from shifted geometric products:
///
/// `w_{m+1} + m x w_m + (1+x) sum_{k=0..m-2} C(m,k) w_{m-k-1} w_{k+1}`,
///
/// for `m >= 1`. Note the returned index is `m + 1`.
pub fn hgp_via_shifted_products(m: u32) -> Poly {
    assert!(m >= 1);
    let mut acc = geometric(m + 1) + Poly::monomial(rat_int(m as i64), 1) * geometric(m);
    if m >= 2 {
        let mut sum = Poly::zero();
        for k in 0..=(m - 2) {
            let prod = geometric(m - k - 1) * geometric(k + 1);
            sum = sum + prod.scale(&big_to_rat(&binomial(m, k as i64)));
        }
        acc = acc + one_plus_x() * sum;
    }
    acc
}

/// Reflection identity with the `1/x` cleared, for `n >= 0`:
/// lhs `= x * hw_{n+1}(-1-x)`,
/// rhs `= (-1)^{n+1} (x+1) (hw_{n+1}(x) + n w_n(x))`.
pub fn hgp_reflection_pair(n: u32) -> (Poly, Poly) {
    let h = hgp(n + 1);
    let lhs = Poly::x() * h.compose_affine(&rat_int(-1), &rat_int(-1));
    let mut rhs = one_plus_x() * (h + geometric(n).scale(&rat_int(n as i64)));
    if n % 2 == 0 {
        rhs = -rhs;
    }
    (lhs, rhs)
}

/// Binomial recurrence, `n >= 2`:
/// lhs `= x sum_{k=1..n} C(n,k) hw_k`,
/// rhs `= (x+1) hw_n - (x+1) w_{n-1}`.
pub fn hgp_binomial_recurrence_pair(n: u32) -> (Poly, Poly) {
    assert!(n >= 2);
    let mut sum = Poly::zero();
    for k in 1..=n {
        sum = sum + hgp(k).scale(&big_to_rat(&binomial(n, k as i64)));
    }
    let lhs = Poly::x() * sum;
    let rhs = one_plus_x() * (hgp(n) - geometric(n - 1));
    (lhs, rhs)
}

/// Mixed convolution identity, `n >= 0`:
/// lhs `= (x+1) sum_k C(n,k) hw_{n-k} w_k`,
/// rhs `= hw_{n+1} + hw_n - w_{n+1}`.
pub fn hgp_gp_convolution_pair(n: u32) -> (Poly, Poly) {
    let mut sum = Poly::zero();
    for k in 0..=n {
        let prod = hgp(n - k) * geometric(k);
        sum = sum + prod.scale(&big_to_rat(&binomial(n, k as i64)));
    }
    let lhs = one_plus_x() * sum;
    let rhs = hgp(n + 1) + hgp(n) - geometric(n + 1);
    (lhs, rhs)
}

/// Raising identity: lhs `= hw_{n+1}`, rhs `= x d/dx((1+x) hw_n) + x w_n`.
pub fn hgp_raising_pair(n: u32) -> (Poly, Poly) {
    let lhs = hgp(n + 1);
    let product = one_plus_x() * hgp(n);
    let rhs = Poly::x() * product.derivative(1) + Poly::x() * geometric(n);
    (lhs, rhs)
}

/// Shifted binomial recurrence with the `x/(1+x)` cleared, `n >= 2`:
/// lhs `= x sum_{k=0..n} C(n,k) hw_{k+1}`,
/// rhs `= (1+x)(hw_{n+1} - hw_n - w_n + w_{n-1})`.
pub fn hgp_shifted_binomial_recurrence_pair(n: u32) -> (Poly, Poly) {
    assert!(n >= 2);
    let mut sum = Poly::zero();
    for k in 0..=n {
        sum = sum + hgp(k + 1).scale(&big_to_rat(&binomial(n, k as i64)));
    }
    let lhs = Poly::x() * sum;
    let rhs = one_plus_x() * (hgp(n + 1) - hgp(n) - geometric(n) + geometric(n - 1));
    (lhs, rhs)
}
