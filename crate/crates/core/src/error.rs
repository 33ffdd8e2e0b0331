//! Error type shared by all numeric operations.

use thiserror::Error;

/// Errors surfaced by evaluation, coefficient and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Jet operands must share the same truncation order.
    #[error("jet order mismatch: {left} vs {right}")]
    JetOrderMismatch { left: usize, right: usize },

    /// Division by a jet whose value coefficient is zero.
    #[error("division by a jet with zero value part")]
    JetDivisionByZero,

    /// Logarithm of a jet whose value coefficient is zero.
    #[error("logarithm of a jet with zero value part")]
    JetLogOfZero,

    /// Principal power with zero base.
    #[error("principal power of zero base")]
    ZeroBase,

    /// Γ evaluated at a nonpositive integer.
    #[error("gamma pole at z = {re}{im:+}i")]
    GammaPole { re: f64, im: f64 },

    /// The Hurwitz zeta pole at s = 1 (refused within |s - 1| < 1e-8).
    #[error("hurwitz zeta pole at s = 1")]
    PoleAtOne,

    /// Parameter outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Parameter outside a series family's validity strip.
    #[error("outside validity region: {0}")]
    Region(String),

    /// An iterative scheme exhausted its budget.
    #[error("{what}: no convergence after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },

    /// tanh-sinh level cap reached before the requested tolerance.
    #[error("quadrature level cap reached (error estimate {estimate:.3e} after {evaluations} evaluations)")]
    QuadratureLevelCap { estimate: f64, evaluations: usize },

    /// Two routes that must agree disagreed beyond tolerance.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    /// A non-finite value was produced.
    #[error("non-finite result in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
