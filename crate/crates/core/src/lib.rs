//! Exact-arithmetic construction of geometric and harmonic geometric
//! polynomials, the number families they evaluate to (Stirling,
//! harmonic, Bernoulli, Genocchi, poly-Bernoulli), exhaustive
//! verification of the identities connecting them, and closed-form
//! evaluation of power sums `sum n^m x^n` and `sum H_n n^m x^n`.
//!
//! Everything is computed over arbitrary-precision rationals; harmonic
//! power sums live in the exact field `a + b ln(1-x)`. There is no
//! floating point in the library proper — numeric quadrature and float
//! convergence checks exist only in the test suites as independent
//! oracles.
//!
//! Bernoulli numbers use the `B_1 = -1/2` convention throughout; it is
//! the unique convention under which the unit-interval integral
//! identities hold.
//!
//! The `parallel` feature (default) fans identity verification out over
//! a rayon thread pool; without it the same API runs sequentially.

pub mod error;
pub mod geometric;
pub mod harmonic_geometric;
pub mod integrals;
pub mod number_identities;
pub mod numbers;
pub mod poly;
pub mod power_series;
pub mod rational;
pub mod report;
pub mod series_eval;
pub mod verify;

pub use error::{Error, Result};
pub use poly::Poly;
pub use rational::{parse_rational, Rational};
pub use report::{IdentityReport, Status};
pub use series_eval::LogLinValue;
pub use verify::Suite;
