//! Weighted unit-interval integrals of geometric and harmonic geometric
//! polynomials, each paired with its Bernoulli closed form.
//!
//! Every integral is evaluated symbolically through the monomial moment
//! maps in [`crate::poly`]; the closed form is computed independently
//! from the Bernoulli table, so the returned pair is a real two-route
//! check.

use crate::error::{Error, Result};
use crate::geometric::geometric;
use crate::harmonic_geometric::hgp;
use crate::numbers::bernoulli;
use crate::poly::Poly;
use crate::rational::{rat, rat_int, Rational};

fn reflected(p: &Poly) -> Poly {
    p.compose_affine(&Rational::new(0.into(), 1.into()), &rat_int(-1))
}

/// `\int_0^1 w_n(-y) dy = B_n`, `n >= 1`.
pub fn gp_unit_integral(n: u32) -> (Rational, Rational) {
    assert!(n >= 1);
    let lhs = reflected(&geometric(n)).integrate01();
    (lhs, bernoulli(n))
}

/// Semi-orthogonality: `\int_0^1 (1-x)/x w_n(-x) w_m(-x) dx = (-1)^{n+1} B_{n+m}`
/// for `n + m >= 1`.
///
/// The closed form carries its sign on the first index. The integrand is
/// symmetric in `(n, m)`, so for odd `n + m >= 3` both orientations agree
/// because `B_{n+m} = 0`; the single orientation `(0, 1)` is the boundary
/// where the sign convention does not describe the integral (the value is
/// `B_1`, not `-B_1`), and verification suites skip it in favor of `(1, 0)`.
pub fn gp_semiorthogonality(n: u32, m: u32) -> Result<(Rational, Rational)> {
    if n + m == 0 {
        return Err(Error::NonvanishingAtZero);
    }
    let integrand = reflected(&geometric(n)) * reflected(&geometric(m));
    let lhs = integrand.integrate01_weight_geometric()?;
    let sign = if n % 2 == 0 { -1 } else { 1 };
    Ok((lhs, bernoulli(n + m) * rat_int(sign)))
}

/// `\int_0^1 hw_n(-y) dy = -(n/2) B_{n-1}`, `n >= 1`.
pub fn hgp_unit_integral(n: u32) -> (Rational, Rational) {
    assert!(n >= 1);
    let lhs = reflected(&hgp(n)).integrate01();
    (lhs, -rat(n as i64, 2) * bernoulli(n - 1))
}

/// `\int_0^1 (1-x)/x hw_{n+1}(-x) dx = (-1)^n (n-1)/2 B_n`, `n >= 0`.
pub fn hgp_weighted_integral(n: u32) -> Result<(Rational, Rational)> {
    let lhs = reflected(&hgp(n + 1)).integrate01_weight_geometric()?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok((lhs, rat(sign * (n as i64 - 1), 2) * bernoulli(n)))
}

/// `\int_0^1 (1-x)/x hw_{n+1}(-x) w_m(-x) dx = (-1)^n (n/2) B_{n+m}` for
/// `n >= 0`, `m >= 1` and even `n + m`.
///
/// The odd-parity case has no known closed form and is rejected; use
/// [`hgp_gp_product_integral_exact`] to tabulate it.
pub fn hgp_gp_product_integral(n: u32, m: u32) -> Result<(Rational, Rational)> {
    assert!(m >= 1);
    if (n + m) % 2 == 1 {
        return Err(Error::Parity { sum: n + m });
    }
    let lhs = hgp_gp_product_integral_exact(n, m)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok((lhs, rat(sign * n as i64, 2) * bernoulli(n + m)))
}

/// Exact value of `\int_0^1 (1-x)/x hw_{n+1}(-x) w_m(-x) dx` for any
/// parity. No closed form is asserted; odd `n + m` is an open problem.
pub fn hgp_gp_product_integral_exact(n: u32, m: u32) -> Result<Rational> {
    let integrand = reflected(&hgp(n + 1)) * reflected(&geometric(m));
    integrand.integrate01_weight_geometric()
}

/// Exact value of `\int_0^1 (1-x)/x hw_n(-x) hw_m(-x) dx`, `n, m >= 1`.
/// Whether this family admits a closed form is an open problem; the
/// value is tabulated, nothing is asserted.
pub fn hgp_semiorthogonality_exact(n: u32, m: u32) -> Result<Rational> {
    assert!(n >= 1 && m >= 1);
    let integrand = reflected(&hgp(n)) * reflected(&hgp(m));
    integrand.integrate01_weight_geometric()
}

/// `\int_0^1 ln(1-x)/x w_n(-x) dx = B_{n-1}`, `n >= 1`.
pub fn gp_log_integral(n: u32) -> Result<(Rational, Rational)> {
    assert!(n >= 1);
    let lhs = reflected(&geometric(n)).integrate01_weight_log_over_x()?;
    Ok((lhs, bernoulli(n - 1)))
}
