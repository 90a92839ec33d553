//! Closed-form evaluation of the power sums `sum n^m x^n` and
//! `sum H_n n^m x^n` (infinite, finite and tail variants) inside the
//! unit disk, plus the literal term-by-term summation oracle.
//!
//! Harmonic power sums live in an exact value field of the shape
//! `a + b ln(1-x)` with rational `a`, `b`: see [`LogLinValue`]. The
//! finite harmonic sum is rational, so its closed form must cancel the
//! `ln(1-x)` coefficient exactly; that cancellation is asserted, not
//! assumed.

use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::geometric::geometric;
use crate::harmonic_geometric::hgp;
use crate::numbers::binomial;
use crate::rational::{big_to_rat, in_unit_disk, int_pow, rat_int, rat_to_f64, Rational};

/// Exact number `base + log_coeff * ln(1 - at)` at a fixed rational
/// point `at` with `0 < |at| < 1`.
///
/// For such `at`, `1` and `ln(1-at)` are independent over the rationals,
/// so equality is componentwise equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogLinValue {
    pub base: Rational,
    pub log_coeff: Rational,
    pub at: Rational,
}

impl LogLinValue {
    pub fn new(base: Rational, log_coeff: Rational, at: Rational) -> Self {
        LogLinValue {
            base,
            log_coeff,
            at,
        }
    }

    pub fn from_rational(base: Rational, at: Rational) -> Self {
        LogLinValue::new(base, Rational::zero(), at)
    }

    pub fn is_log_free(&self) -> bool {
        self.log_coeff.is_zero()
    }

    fn assert_same_point(&self, other: &Self) {
        assert_eq!(self.at, other.at, "mixed evaluation points");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_point(other);
        LogLinValue::new(
            &self.base + &other.base,
            &self.log_coeff + &other.log_coeff,
            self.at.clone(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_point(other);
        LogLinValue::new(
            &self.base - &other.base,
            &self.log_coeff - &other.log_coeff,
            self.at.clone(),
        )
    }

    /// Scaling by a rational keeps the field closed; a product of two
    /// log-bearing values does not arise and is intentionally absent.
    pub fn scale(&self, c: &Rational) -> Self {
        LogLinValue::new(&self.base * c, &self.log_coeff * c, self.at.clone())
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.base) + rat_to_f64(&self.log_coeff) * (1.0 - rat_to_f64(&self.at)).ln()
    }
}

/// Wire format `a + b*ln(1-x)`, e.g. `0 + -2*ln(1-x)`.
impl fmt::Display for LogLinValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*ln(1-x)", self.base, self.log_coeff)
    }
}

fn require_unit_disk(x: &Rational) -> Result<()> {
    if in_unit_disk(x) {
        Ok(())
    } else {
        Err(Error::domain(format!("|x| must be < 1, got {x}")))
    }
}

fn require_punctured_unit_disk(x: &Rational) -> Result<()> {
    require_unit_disk(x)?;
    if x.is_zero() {
        return Err(Error::domain("x must be nonzero for harmonic sums"));
    }
    Ok(())
}

/// `x^e` by squaring on numerator and denominator (coprime, so the
/// result needs no reduction).
fn rat_pow_fast(x: &Rational, e: u32) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    Rational::new_raw(x.numer().pow(e), x.denom().pow(e))
}

fn transformed_argument(x: &Rational) -> Rational {
    x / (Rational::one() - x)
}

/// `sum_{n>=0} n^m x^n = w_m(x/(1-x)) / (1-x)`, exact, `|x| < 1`.
pub fn power_sum(m: u32, x: &Rational) -> Result<Rational> {
    require_unit_disk(x)?;
    let y = transformed_argument(x);
    Ok(geometric(m).eval(&y) / (Rational::one() - x))
}

/// `sum_{n=0..p} n^m x^n` in closed form (`0^0 = 1`), exact, `|x| < 1`.
///
/// The tail subtracted from the full series is
/// `x^{p+1}/(1-x) * sum_{k=0..m} C(m,k) (p+1)^{m-k} w_k(x/(1-x))`,
/// obtained by shifting the summation index by `p+1`.
pub fn power_sum_partial(m: u32, p: u32, x: &Rational) -> Result<Rational> {
    require_unit_disk(x)?;
    let y = transformed_argument(x);
    let mut shifted = Rational::zero();
    for k in 0..=m {
        let weight = binomial(m, k as i64) * int_pow(p as u64 + 1, m - k);
        shifted += big_to_rat(&weight) * geometric(k).eval(&y);
    }
    let tail = rat_pow_fast(x, p + 1) / (Rational::one() - x) * shifted;
    Ok(power_sum(m, x)? - tail)
}

/// `sum_{n>=1} H_n n^m x^n`, exact, `0 < |x| < 1`:
/// base `hw_m(x/(1-x))/(1-x)`, log coefficient `-w_m(x/(1-x))/(1-x)`.
pub fn harmonic_power_sum(m: u32, x: &Rational) -> Result<LogLinValue> {
    require_punctured_unit_disk(x)?;
    let y = transformed_argument(x);
    let scale = Rational::one() - x;
    Ok(LogLinValue::new(
        hgp(m).eval(&y) / &scale,
        -geometric(m).eval(&y) / &scale,
        x.clone(),
    ))
}

/// The infinite power sum extended to index `-1`, where it degenerates to
/// `-ln(1-x)`: the unique reading under which the tail formula below
/// reproduces literal summation.
fn power_sum_ext(k: i64, x: &Rational) -> Result<LogLinValue> {
    if k < 0 {
        Ok(LogLinValue::new(
            Rational::zero(),
            -Rational::one(),
            x.clone(),
        ))
    } else {
        Ok(LogLinValue::from_rational(power_sum(k as u32, x)?, x.clone()))
    }
}

/// The finite power sum extended to index `-1` as `sum_{n=1..q} x^n / n`.
fn power_sum_partial_ext(k: i64, q: u32, x: &Rational) -> Result<Rational> {
    if k < 0 {
        let mut acc = Rational::zero();
        let mut xn = Rational::one();
        for n in 1..=q {
            xn *= x;
            acc += &xn / rat_int(n as i64);
        }
        Ok(acc)
    } else {
        power_sum_partial(k as u32, q, x)
    }
}

/// Tail `sum_{n>p} H_n n^m x^n` in closed form, `p >= 1`, `0 < |x| < 1`:
///
/// `x^p sum_k C(m,k) p^{m-k} hA(k;x)
///  + sum_k C(m,k) A(k-1;x) A_fin(m-k, p-1; x)
///  - sum_k sum_{j=0..p-1} C(m,k) j^{m-k} A_fin(k-1, p-j; x) x^j`
///
/// with the index `-1` extensions above.
pub fn harmonic_power_sum_tail(m: u32, p: u32, x: &Rational) -> Result<LogLinValue> {
    assert!(p >= 1, "tail cut must be positive");
    require_punctured_unit_disk(x)?;

    let mut shifted = LogLinValue::from_rational(Rational::zero(), x.clone());
    for k in 0..=m {
        let weight = big_to_rat(&(binomial(m, k as i64) * int_pow(p as u64, m - k)));
        shifted = shifted.add(&harmonic_power_sum(k, x)?.scale(&weight));
    }
    let mut acc = shifted.scale(&rat_pow_fast(x, p));

    for k in 0..=m {
        let weight = big_to_rat(&binomial(m, k as i64));
        let partial = power_sum_partial(m - k, p - 1, x)?;
        let term = power_sum_ext(k as i64 - 1, x)?.scale(&(weight * partial));
        acc = acc.add(&term);
    }

    let mut correction = Rational::zero();
    let mut xj = Rational::one();
    for j in 0..p {
        if j > 0 {
            xj *= x;
        }
        for k in 0..=m {
            let weight = binomial(m, k as i64) * int_pow(j as u64, m - k);
            if weight.is_zero() {
                continue;
            }
            let partial = power_sum_partial_ext(k as i64 - 1, p - j, x)?;
            correction += big_to_rat(&weight) * partial * &xj;
        }
    }
    Ok(acc.sub(&LogLinValue::from_rational(correction, x.clone())))
}

/// `sum_{n=1..p} H_n n^m x^n` in closed form, `p >= 1`, `0 < |x| < 1`.
///
/// Computed as the full series minus its tail; the `ln(1-x)` coefficients
/// must cancel exactly, and any residue is reported as an error rather
/// than dropped.
pub fn harmonic_power_sum_partial(m: u32, p: u32, x: &Rational) -> Result<Rational> {
    let diff = harmonic_power_sum(m, x)?.sub(&harmonic_power_sum_tail(m, p, x)?);
    if !diff.is_log_free() {
        return Err(Error::LogResidue {
            residue: diff.log_coeff.to_string(),
        });
    }
    Ok(diff.base)
}

/// Literal term-by-term summation of `sum_{n=0..p} n^m x^n` or
/// `sum_{n=1..p} H_n n^m x^n`. The independent oracle for every closed
/// form in this module, and the naive side of the benchmarks.
pub fn direct_sum(m: u32, p: u32, x: &Rational, with_harmonic: bool) -> Rational {
    let mut acc = if !with_harmonic && m == 0 {
        Rational::one() // the n = 0 term under 0^0 = 1
    } else {
        Rational::zero()
    };
    let mut xn = Rational::one();
    let mut h = Rational::zero();
    for n in 1..=p {
        xn *= x;
        let mut term = big_to_rat(&int_pow(n as u64, m)) * &xn;
        if with_harmonic {
            h += Rational::new(1.into(), n.into());
            term *= &h;
        }
        acc += term;
    }
    acc
}
