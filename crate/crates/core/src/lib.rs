//! Numerical evaluation of the Hurwitz zeta function ζ(s, α), its derivatives
//! with respect to s, and the Lerch zeta function φ(λ, α, s), together with
//! the closed-form Fourier coefficients these functions have on the unit
//! interval and the Parseval quantities attached to them.
//!
//! The crate is layered bottom-up:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`jet`] | truncated Taylor (jet) arithmetic that mechanizes ∂ʳ/∂sʳ |
//! | [`bernoulli`] | Bernoulli numbers B₀..B₆₀ by the exact recurrence |
//! | [`gamma`] | Γ, ln Γ, ψ⁽ᵐ⁾, jets of Γ, the Beta function |
//! | [`incgamma`] | upper incomplete gamma Γ(a, z) for complex arguments |
//! | [`quadrature`] | tanh-sinh quadrature on (0,1), numeric Fourier coefficients, Parseval left-hand sides, oscillatory tails |
//! | [`zeta`] | ζ(s, α), ζₖ(s, α), ζ⁽ʳ⁾(s, α), ζ(s) by Euler–Maclaurin in jet arithmetic; the power series in α |
//! | [`lerch`] | φ(λ, α, s) by head sum + Abel–Plana tail, and by its exponential expansion in α |
//! | [`fourier`] | closed-form Fourier coefficients for all series families, Parseval right-hand sides, the product-integral pairing |
//! | [`verify`] | proposition-by-proposition comparison of every closed form against the quadrature oracle |
//!
//! Every numeric operation takes an [`EvalParams`] carrying truncation
//! lengths and the target tolerance, and returns `Result` so that poles,
//! region violations and convergence failures surface as typed errors.

pub mod bernoulli;
pub mod error;
pub mod fourier;
pub mod gamma;
pub mod incgamma;
pub mod jet;
pub mod lerch;
pub mod params;
pub mod quadrature;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use jet::{pow_principal, Jet};
pub use params::EvalParams;

/// The universal scalar: a complex number with `f64` components.
pub type Complex = num_complex::Complex64;
