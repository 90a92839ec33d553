//! Pure-number identities tying Stirling numbers, harmonic numbers,
//! Bernoulli and poly-Bernoulli numbers together.
//!
//! Every operation computes its left- and right-hand side independently
//! and returns the pair; the two sides never share subexpressions, so an
//! equality assertion on the result is a non-circular check.

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::numbers::{
    bernoulli, binomial, factorial, harmonic, poly_bernoulli, stirling1_unsigned, stirling2,
};
use crate::rational::{big_to_rat, rat, rat_int, Rational};

fn alternating(sign_odd: bool, k: u32) -> i64 {
    if (k % 2 == 1) == sign_odd {
        1
    } else {
        -1
    }
}

/// `sum_{k=1..n} c(n,k) k = n! H_n`, `n >= 1`.
pub fn stirling1_harmonic_sum(n: u32) -> (Rational, Rational) {
    let lhs: BigInt = (1..=n)
        .map(|k| stirling1_unsigned(n, k) * BigInt::from(k))
        .sum();
    let rhs = big_to_rat(&factorial(n)) * harmonic(n);
    (big_to_rat(&lhs), rhs)
}

/// `sum_{k=j..n} c(n+1,k+1) S(k,j) k = C(n+1,j) n!/(j-1)! (H_{n+1} - H_j)`,
/// for `1 <= j <= n`.
pub fn stirling_pair_harmonic_sum(n: u32, j: u32) -> (Rational, Rational) {
    assert!(1 <= j && j <= n);
    let lhs: BigInt = (j..=n)
        .map(|k| stirling1_unsigned(n + 1, k + 1) * stirling2(k, j) * BigInt::from(k))
        .sum();
    let rhs = big_to_rat(&(binomial(n + 1, j as i64) * factorial(n) / factorial(j - 1)))
        * (harmonic(n + 1) - harmonic(j));
    (big_to_rat(&lhs), rhs)
}

/// `sum_{k=1..n} (-1)^{k+1} S(n,k) k! H_k / (k+1) = (n/2) B_{n-1}`, `n >= 1`.
pub fn harmonic_stirling_bernoulli(n: u32) -> (Rational, Rational) {
    assert!(n >= 1);
    let mut lhs = Rational::zero();
    for k in 1..=n {
        let term = big_to_rat(&(stirling2(n, k) * factorial(k))) * harmonic(k)
            / rat_int(k as i64 + 1);
        lhs += term * rat_int(alternating(true, k));
    }
    let rhs = rat(n as i64, 2) * bernoulli(n - 1);
    (lhs, rhs)
}

/// `sum_{k=1..n} (-1)^{k-1} S(n,k) (k-1)! H_k = B_{n-1}`, `n >= 1`.
pub fn bernoulli_from_harmonic_stirling(n: u32) -> (Rational, Rational) {
    assert!(n >= 1);
    let mut lhs = Rational::zero();
    for k in 1..=n {
        let term = big_to_rat(&(stirling2(n, k) * factorial(k - 1))) * harmonic(k);
        lhs += term * rat_int(alternating(true, k));
    }
    (lhs, bernoulli(n - 1))
}

/// Double Stirling sum for Bernoulli numbers, `n > 1`, `m >= 1`, `n + m` odd:
///
/// `(-1)^{n-1} (n-1)/2 B_{n+m-1}
///   = sum_{j=1..n} sum_{k=1..m} (-1)^{k+j} S(n,j) S(m,k) j! k! H_j / ((k+j)(k+j+1))`.
///
/// The even-parity case is rejected: its value is an open question, not a
/// theorem, and must not be returned as if it were one.
pub fn bernoulli_double_stirling_sum(n: u32, m: u32) -> Result<(Rational, Rational)> {
    assert!(n > 1 && m >= 1);
    if (n + m) % 2 == 0 {
        return Err(Error::Parity { sum: n + m });
    }
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let lhs = rat(sign * (n as i64 - 1), 2) * bernoulli(n + m - 1);
    let mut rhs = Rational::zero();
    for j in 1..=n {
        let outer = big_to_rat(&(stirling2(n, j) * factorial(j))) * harmonic(j);
        for k in 1..=m {
            let inner = big_to_rat(&(stirling2(m, k) * factorial(k)));
            let denom = rat_int((k + j) as i64) * rat_int((k + j + 1) as i64);
            let term = &outer * inner / denom;
            rhs += term * rat_int(alternating(false, k + j));
        }
    }
    Ok((lhs, rhs))
}

/// `sum_{k=2..n} (-1)^k S(n,k) (k-1)! H_{k-1} H_k = (n+1)/2 B_{n-2}`, `n >= 2`.
pub fn bernoulli_harmonic_square_sum(n: u32) -> (Rational, Rational) {
    assert!(n >= 2);
    let mut lhs = Rational::zero();
    for k in 2..=n {
        let term = big_to_rat(&(stirling2(n, k) * factorial(k - 1))) * harmonic(k - 1) * harmonic(k);
        lhs += term * rat_int(alternating(false, k));
    }
    let rhs = rat(n as i64 + 1, 2) * bernoulli(n - 2);
    (lhs, rhs)
}

/// Odd poly-Bernoulli reduction: `B^{(2)}_n = -(n-2)/4 B_{n-1}` for odd `n >= 1`.
pub fn poly_bernoulli_reduction(n: u32) -> Result<(Rational, Rational)> {
    assert!(n >= 1);
    if n % 2 == 0 {
        return Err(Error::Parity { sum: n });
    }
    let lhs = poly_bernoulli(n, 2);
    let rhs = -rat(n as i64 - 2, 4) * bernoulli(n - 1);
    Ok((lhs, rhs))
}
