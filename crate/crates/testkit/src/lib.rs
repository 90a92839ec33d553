//! Test-only numeric oracles shared by the workspace test suites.
//!
//! Nothing here belongs in the library proper: the crates under test are
//! exact, and these helpers exist so their results can be cross-checked
//! against independent floating-point routes.

/// Adaptive tanh-sinh (double-exponential) quadrature of `f` over (0, 1).
///
/// Handles integrable endpoint singularities such as `ln(1-x)` weights:
/// the substitution clusters nodes double-exponentially toward both
/// endpoints, so the integrand is never evaluated at 0 or 1 exactly.
pub fn integrate_01(f: impl Fn(f64) -> f64, eps: f64) -> f64 {
    // x(t) = (1 + tanh((pi/2) sinh t)) / 2 maps R onto (0, 1). Once the
    // tanh saturates in f64 the node collapses onto an endpoint; those
    // nodes carry ~1e-15 of weight and are skipped so singular
    // integrands are never evaluated at 0 or 1.
    let sample = |t: f64| -> f64 {
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        let x = 0.5 * (1.0 + u.tanh());
        if x <= 0.0 || x >= 1.0 {
            return 0.0;
        }
        let w = std::f64::consts::FRAC_PI_4 * t.cosh() / u.cosh().powi(2);
        let v = w * f(x);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    let t_max = 4.0;
    let mut h = 0.5;
    let mut previous = f64::INFINITY;
    let mut total = 0.0;
    for level in 0..12 {
        if level == 0 {
            let mut acc = 0.0;
            let mut t = -t_max;
            while t <= t_max + 1e-12 {
                acc += sample(t);
                t += h;
            }
            total = acc * h;
        } else {
            // refine: add the midpoints of the previous grid
            let mut acc = 0.0;
            let mut t = -t_max + h / 2.0;
            while t <= t_max + 1e-12 {
                acc += sample(t);
                t += h;
            }
            total = total / 2.0 + acc * (h / 2.0);
            h /= 2.0;
            if (total - previous).abs() <= eps * total.abs().max(1.0) && level >= 3 {
                return total;
            }
        }
        previous = total;
    }
    total
}

/// Tiny deterministic xorshift generator for picking reproducible
/// pseudo-random test tuples.
#[derive(Debug, Clone)]
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform draw from `lo..=hi`.
    pub fn range(&mut self, lo: u32, hi: u32) -> u32 {
        debug_assert!(lo <= hi);
        lo + (self.next_u64() % (hi - lo + 1) as u64) as u32
    }
}
