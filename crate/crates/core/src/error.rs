use thiserror::Error;

/// Errors surfaced by exact operations.
///
/// Every variant signals a caller-side precondition violation or, for
/// `NonzeroRemainder` and `LogResidue`, an identity that failed to hold
/// where it was required to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomial division left a nonzero remainder where exactness was required.
    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    /// The integrand must vanish at x = 0 for weights singular at the origin.
    #[error("integrand has a nonzero constant term; weight is singular at x = 0")]
    NonvanishingAtZero,
    /// The integrand must vanish at x = 1 for weights singular at one.
    #[error("integrand does not vanish at x = 1; weight is singular there")]
    NonvanishingAtOne,
    /// An identity with a parity precondition was invoked off-parity.
    #[error("parity precondition violated: n + m = {sum} has the wrong parity")]
    Parity { sum: u32 },
    /// An argument fell outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// ln(1-x) coefficients failed to cancel in a finite harmonic power sum.
    #[error("log coefficients failed to cancel exactly (residue {residue})")]
    LogResidue { residue: String },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
