//! Combinatorial number families: Stirling triangles, binomials,
//! factorials, harmonic numbers, Bernoulli, Genocchi and poly-Bernoulli
//! numbers.
//!
//! All families are memoized in process-global triangular or linear
//! tables. Tables only ever grow; a computed value is never discarded.
//! Memoization is invisible: concurrent callers observe exactly the
//! values an unmemoized implementation would produce.
//!
//! Sign convention: `bernoulli(1) == -1/2`. This is the unique convention
//! under which the unit-interval integrals of reflected geometric
//! polynomials reproduce the Bernoulli sequence, and it is forced by the
//! defining Stirling sum used here.

use std::sync::{LazyLock, RwLock};

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::rational::{big_to_rat, rat_int, Rational};

static STIRLING2: LazyLock<RwLock<Vec<Vec<BigInt>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![BigInt::one()]]));
static STIRLING1: LazyLock<RwLock<Vec<Vec<BigInt>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![BigInt::one()]]));
static BINOMIAL: LazyLock<RwLock<Vec<Vec<BigInt>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![BigInt::one()]]));
static FACTORIAL: LazyLock<RwLock<Vec<BigInt>>> =
    LazyLock::new(|| RwLock::new(vec![BigInt::one()]));
static HARMONIC: LazyLock<RwLock<Vec<Rational>>> =
    LazyLock::new(|| RwLock::new(vec![Rational::zero()]));
static BERNOULLI: LazyLock<RwLock<Vec<Rational>>> = LazyLock::new(|| RwLock::new(Vec::new()));

fn triangle_entry(
    table: &RwLock<Vec<Vec<BigInt>>>,
    n: usize,
    k: usize,
    next_row: impl Fn(usize, &[BigInt]) -> Vec<BigInt>,
) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    {
        let rows = table.read().unwrap();
        if n < rows.len() {
            return rows[n][k].clone();
        }
    }
    let mut rows = table.write().unwrap();
    while rows.len() <= n {
        let m = rows.len();
        let row = next_row(m, &rows[m - 1]);
        debug_assert_eq!(row.len(), m + 1);
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Stirling number of the second kind `S(n, k)`: partitions of an n-set
/// into k nonempty blocks. `S(0,0) = 1`, `S(n,k) = 0` for `k > n`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    triangle_entry(&STIRLING2, n as usize, k as usize, |m, prev| {
        let mut row = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let carry = if j < prev.len() {
                BigInt::from(j) * &prev[j]
            } else {
                BigInt::zero()
            };
            row[j] = carry + &prev[j - 1];
        }
        row
    })
}

/// Unsigned Stirling number of the first kind `c(n, k)`: permutations of
/// n elements with k cycles. `c(0,0) = 1`, `c(n,k) = 0` for `k > n`.
pub fn stirling1_unsigned(n: u32, k: u32) -> BigInt {
    triangle_entry(&STIRLING1, n as usize, k as usize, |m, prev| {
        let mut row = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let carry = if j < prev.len() {
                BigInt::from(m - 1) * &prev[j]
            } else {
                BigInt::zero()
            };
            row[j] = carry + &prev[j - 1];
        }
        row
    })
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > n as i64 {
        return BigInt::zero();
    }
    triangle_entry(&BINOMIAL, n as usize, k as usize, |m, prev| {
        let mut row = vec![BigInt::one(); m + 1];
        for j in 1..m {
            row[j] = &prev[j - 1] + &prev[j];
        }
        row
    })
}

/// `n!`.
pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIAL.read().unwrap();
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = FACTORIAL.write().unwrap();
    while table.len() <= n {
        let m = table.len();
        let next = table[m - 1].clone() * BigInt::from(m);
        table.push(next);
    }
    table[n].clone()
}

/// Rising factorial `p (p+1) ... (p+k-1)`, with the empty product 1.
pub fn rising_factorial(p: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(p + i);
    }
    acc
}

/// Harmonic number `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u32) -> Rational {
    let n = n as usize;
    {
        let table = HARMONIC.read().unwrap();
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = HARMONIC.write().unwrap();
    while table.len() <= n {
        let m = table.len();
        let next = table[m - 1].clone() + Rational::new(BigInt::one(), BigInt::from(m));
        table.push(next);
    }
    table[n].clone()
}

fn bernoulli_from_stirling_sum(n: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let mut term = big_to_rat(&(stirling2(n, k) * factorial(k)));
        term /= rat_int(k as i64 + 1);
        if k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// Bernoulli number `B_n` in the `B_1 = -1/2` convention, computed from
/// the alternating Stirling sum `sum_k (-1)^k S(n,k) k!/(k+1)`.
///
/// The classical recurrence `sum_{k<n} C(n,k) B_k = 0` is deliberately
/// not used here, so it stays available as an independent cross-check.
pub fn bernoulli(n: u32) -> Rational {
    let n = n as usize;
    {
        let table = BERNOULLI.read().unwrap();
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = BERNOULLI.write().unwrap();
    while table.len() <= n {
        let m = table.len() as u32;
        let next = bernoulli_from_stirling_sum(m);
        table.push(next);
    }
    table[n].clone()
}

/// Genocchi number `G_n = n * w_{n-1}(-1/2)` for `n >= 1`.
///
/// `G_0` has no convention here and is rejected.
pub fn genocchi(n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::domain("genocchi is defined for n >= 1"));
    }
    let value = crate::geometric::geometric(n - 1).eval(&crate::rational::rat(-1, 2));
    Ok(value * rat_int(n as i64))
}

/// Poly-Bernoulli number `(-1)^n sum_k (-1)^k S(n,k) k!/(k+1)^q`.
///
/// Negative `q` turns the `(k+1)^q` divisor into a multiplier.
pub fn poly_bernoulli(n: u32, q: i32) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let base = BigInt::from(k + 1);
        let weight = if q >= 0 {
            Rational::new(BigInt::one(), base.pow(q as u32))
        } else {
            big_to_rat(&base.pow((-q) as u32))
        };
        let term = big_to_rat(&(stirling2(n, k) * factorial(k))) * weight;
        if k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    if n % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// Ordered Bell number `sum_k S(n,k) k!`, the value `w_n(1)`.
pub fn ordered_bell(n: u32) -> BigInt {
    (0..=n).map(|k| stirling2(n, k) * factorial(k)).sum()
}

/// Fault-injection hook: adds 1 to the memoized `S(n, k)` entry.
///
/// Exists so the verification pipeline can prove it detects a corrupted
/// table. Never call this outside a verification self-test; the table
/// stays corrupted for the remainder of the process.
#[doc(hidden)]
pub fn corrupt_stirling2_entry(n: u32, k: u32) {
    stirling2(n, k); // force the row into the table
    let mut rows = STIRLING2.write().unwrap();
    rows[n as usize][k as usize] += BigInt::one();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn stirling2_small_values() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(1, 0), BigInt::zero());
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(3, 5), BigInt::zero());
    }

    #[test]
    fn stirling1_small_values() {
        assert_eq!(stirling1_unsigned(0, 0), BigInt::one());
        assert_eq!(stirling1_unsigned(3, 1), BigInt::from(2));
        assert_eq!(stirling1_unsigned(3, 2), BigInt::from(3));
        assert_eq!(stirling1_unsigned(5, 1), BigInt::from(24));
        assert_eq!(stirling1_unsigned(2, 5), BigInt::zero());
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
    }

    #[test]
    fn harmonic_small_values() {
        assert_eq!(harmonic(0), Rational::zero());
        assert_eq!(harmonic(3), rat(11, 6));
        assert_eq!(harmonic(4), rat(25, 12));
    }

    #[test]
    fn bernoulli_convention() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), Rational::zero());
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_classical_recurrence_cross_check() {
        // sum_{k=0}^{n-1} C(n,k) B_k = 0 for n >= 2, an independent route
        // to the same sequence.
        for n in 2..=30u32 {
            let total: Rational = (0..n)
                .map(|k| big_to_rat(&binomial(n, k as i64)) * bernoulli(k))
                .sum();
            assert!(total.is_zero(), "recurrence failed at n = {n}");
        }
    }

    #[test]
    fn genocchi_values() {
        assert!(genocchi(0).is_err());
        assert_eq!(genocchi(1).unwrap(), rat_int(1));
        assert_eq!(genocchi(2).unwrap(), rat_int(-1));
        assert_eq!(genocchi(4).unwrap(), rat_int(1));
        assert_eq!(genocchi(6).unwrap(), rat_int(-3));
        assert_eq!(genocchi(8).unwrap(), rat_int(17));
    }

    #[test]
    fn genocchi_matches_bernoulli_route() {
        // G_n = 2 (1 - 2^n) B_n, an independent classical relation.
        for n in 1..=20u32 {
            let lhs = genocchi(n).unwrap();
            let rhs = (rat_int(1) - big_to_rat(&BigInt::from(2).pow(n))) * rat_int(2) * bernoulli(n);
            assert_eq!(lhs, rhs, "mismatch at n = {n}");
        }
    }

    #[test]
    fn odd_bernoulli_and_genocchi_vanish() {
        for m in 1..=12u32 {
            assert!(bernoulli(2 * m + 1).is_zero());
            assert!(genocchi(2 * m + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn poly_bernoulli_values() {
        for q in [-2, 0, 1, 3] {
            assert_eq!(poly_bernoulli(0, q), rat_int(1));
        }
        assert_eq!(poly_bernoulli(1, 2), rat(1, 4));
        for n in 0..=15u32 {
            let sign = if n % 2 == 1 { -1 } else { 1 };
            assert_eq!(poly_bernoulli(n, 1), rat_int(sign) * bernoulli(n));
        }
    }

    #[test]
    fn poly_bernoulli_odd_reduction() {
        for n in (1..=21u32).step_by(2) {
            let rhs = -rat(n as i64 - 2, 4) * bernoulli(n - 1);
            assert_eq!(poly_bernoulli(n, 2), rhs, "mismatch at n = {n}");
        }
    }

    #[test]
    fn stirling_row_sums_are_ordered_bell() {
        let expected = [1i64, 1, 3, 13, 75, 541, 4683, 47293];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(ordered_bell(n as u32), BigInt::from(e));
        }
        for n in 0..=25u32 {
            assert_eq!(
                big_to_rat(&ordered_bell(n)),
                crate::geometric::geometric(n).eval(&rat_int(1))
            );
        }
    }

    #[test]
    fn stirling_product_relation() {
        // sum_{k=j..n} c(n,k) S(k,j) = C(n,j) (n-1)!/(j-1)!
        for n in 1..=15u32 {
            for j in 1..=n {
                let lhs: BigInt = (j..=n).map(|k| stirling1_unsigned(n, k) * stirling2(k, j)).sum();
                let rhs = binomial(n, j as i64) * factorial(n - 1) / factorial(j - 1);
                assert_eq!(lhs, rhs, "mismatch at n = {n}, j = {j}");
            }
        }
    }
}
