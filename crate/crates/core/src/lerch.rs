//! The Lerch zeta function φ(λ, α, s) = Σ_{n≥0} e^(2πiλn)(n+α)^(−s) for
//! 0 < λ ≤ 1, α > 0, including its analytic continuation to σ ≤ 1 (entire
//! in s for non-integer λ), and its exponential expansion in α.
//!
//! Two evaluation routes are implemented:
//!
//! * head sum of N terms plus an Abel–Plana boundary-corrected tail — the
//!   tail's principal integral has the closed incomplete-gamma form
//!   e^(−2πiλc)(−2πiλ)^(s−1) Γ(1−s, −2πiλc), and the correction integral
//!   i∫₀^∞ [g(ix) − g(−ix)]/(e^(2πx) − 1) dx converges for any σ once
//!   0 < λ < 1, so the same expression continues φ to the whole s-plane;
//! * the real-integral representation φ = (1/Γ(s)) ∫₀^∞ t^(s−1) e^(−αt) /
//!   (1 − e^(2πiλ−t)) dt, used for σ > 0 when λ sits near 0 or 1 where the
//!   Abel–Plana correction decays too slowly.
//!
//! At λ = 1 both reduce to ζ(s, α) and the Hurwitz evaluator is used, so
//! the integer-λ case shares its code path exactly.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::incgamma::upper_incomplete_gamma;
use crate::jet::pow_principal_scalar;
use crate::params::EvalParams;
use crate::quadrature::{integrate_01, SingularityHint};
use crate::zeta::{hurwitz_zeta_jet, HurwitzPoint};
use crate::Complex;

pub use crate::zeta::LerchPoint;

/// λ values this close to 0 or 1 route through the integral representation
/// (the Abel–Plana correction integrand decays like e^(−2π·min(λ,1−λ)x)).
const LAMBDA_EDGE: f64 = 0.05;

/// exp(w) − 1 with full relative accuracy near w = 0.
fn expm1_complex(w: Complex) -> Complex {
    if w.norm() < 0.5 {
        // Taylor with Horner; 14 terms cover |w| < 0.5 to below 1e-17.
        let mut acc = Complex::new(0.0, 0.0);
        for k in (1..=14).rev() {
            acc = (acc + 1.0) * w / k as f64;
        }
        acc
    } else {
        w.exp() - 1.0
    }
}

/// e^(2πiθ) from the fractional part of θ, safe for large θ.
fn unit_phase(theta: f64) -> Complex {
    Complex::from_polar(1.0, 2.0 * PI * theta.fract())
}

/// λ wrapped to (−1/2, 1/2]; e^(2πiλ) is unchanged, but the reduced value
/// keeps −t + 2πiλ' small near λ = 1 so the denominator 1 − e^(2πiλ−t)
/// retains full relative accuracy through [`expm1_complex`].
fn wrap_lambda(lambda: f64) -> f64 {
    if lambda > 0.5 {
        lambda - 1.0
    } else {
        lambda
    }
}

/// Σ_{m≥0} e^(2πiλm)(m+c)^(−s) for 0 < λ < 1 and c > 0, by Abel–Plana:
///
///   ∫₀^∞ g + ½ g(0) + i∫₀^∞ [g(ix) − g(−ix)]/(e^(2πx) − 1) dx,
///   g(x) = e^(2πiλx)(x+c)^(−s).
///
/// For σ ≤ 0 the left side diverges as a series but the right side is the
/// analytic continuation of the tail, which is what callers want.
pub(crate) fn abel_plana_tail(
    lambda: f64,
    c: f64,
    s: Complex,
    params: &EvalParams,
) -> Result<Complex> {
    let two_pi_lambda = 2.0 * PI * lambda;
    // principal integral: e^(−2πiλc)·(−2πiλ)^(s−1)·Γ(1−s, −2πiλc)
    let p = Complex::new(0.0, -two_pi_lambda);
    let principal = unit_phase(-lambda * c)
        * pow_principal_scalar(p, s - 1.0)?
        * upper_incomplete_gamma(Complex::new(1.0, 0.0) - s, p * c)?;

    let half = 0.5 * (-s * c.ln()).exp();

    let correction = {
        let integrand = move |v: f64| {
            let x = v / (1.0 - v);
            let jac = 1.0 / ((1.0 - v) * (1.0 - v));
            let two_pi_x = 2.0 * PI * x;
            let up = pow_principal_scalar(Complex::new(c, x), -s)?;
            let down = pow_principal_scalar(Complex::new(c, -x), -s)?;
            let (t1, t2) = if two_pi_x > 40.0 {
                // e^(±2πλx)/(e^(2πx)−1) in log form to dodge inf/inf
                let ln_denom = two_pi_x + (-two_pi_x).exp().ln_1p();
                (
                    up * (-two_pi_lambda * x - ln_denom).exp(),
                    down * (two_pi_lambda * x - ln_denom).exp(),
                )
            } else {
                let denom = two_pi_x.exp_m1();
                (
                    up * (-two_pi_lambda * x).exp() / denom,
                    down * (two_pi_lambda * x).exp() / denom,
                )
            };
            Ok(Complex::new(0.0, 1.0) * (t1 - t2) * jac)
        };
        integrate_01(integrand, SingularityHint::None, params)?.value
    };

    Ok(principal + half + correction)
}

/// Head-plus-tail route, valid for every s once 0 < λ < 1, with λ away
/// from the interval edges.
fn lerch_head_ap(p: &LerchPoint, params: &EvalParams) -> Result<Complex> {
    let s = p.s;
    let n_head = 8usize
        .max(s.norm().ceil() as usize + 4)
        .max((10.0 - p.alpha).ceil().max(0.0) as usize);
    let mut head = Complex::new(0.0, 0.0);
    for n in 0..n_head {
        head += unit_phase(p.lambda * n as f64) * (-s * (n as f64 + p.alpha).ln()).exp();
    }
    let c = n_head as f64 + p.alpha;
    let tail = abel_plana_tail(p.lambda, c, s, params)?;
    Ok(head + unit_phase(p.lambda * n_head as f64) * tail)
}

/// Integral-representation route for σ > 0:
/// φ = (1/Γ(s)) ∫₀^∞ t^(s−1) e^(−αt) / (1 − e^(2πiλ−t)) dt, t = v/(1−v).
fn lerch_integral_rep(p: &LerchPoint, params: &EvalParams) -> Result<Complex> {
    let s = p.s;
    let alpha = p.alpha;
    let two_pi_lambda = 2.0 * PI * wrap_lambda(p.lambda);
    let g = gamma(s)?;
    let integrand = move |v: f64| {
        let t = v / (1.0 - v);
        let jac = 1.0 / ((1.0 - v) * (1.0 - v));
        let exponent = (s - 1.0) * t.ln() - alpha * t;
        if exponent.re < -745.0 {
            return Ok(Complex::new(0.0, 0.0));
        }
        let numer = exponent.exp();
        let denom = -expm1_complex(Complex::new(-t, two_pi_lambda));
        Ok(numer / denom * jac)
    };
    let out = integrate_01(integrand, SingularityHint::LeftAlgebraic(s.re - 1.0), params)?;
    Ok(out.value / g)
}

/// φ(λ, α, s) anywhere in 0 < λ ≤ 1, α > 0. At λ = 1 this is ζ(s, α) and
/// delegates to the Hurwitz evaluator (the pole at s = 1 applies there
/// only).
pub fn lerch_phi(p: &LerchPoint, params: &EvalParams) -> Result<Complex> {
    p.validate()?;
    params.validate()?;
    if p.lambda == 1.0 {
        return Ok(hurwitz_zeta_jet(&HurwitzPoint::new(p.s, p.alpha), params)?.value());
    }
    if p.s.re > 0.0 && p.lambda.min(1.0 - p.lambda) < LAMBDA_EDGE {
        lerch_integral_rep(p, params)
    } else {
        lerch_head_ap(p, params)
    }
}

/// φ(λ, α, s) for σ < 1 by the exponential expansion in α,
///
///   φ = e^(−2πiλα) Γ(1−s) Σ_{n∈ℤ} e^(−2πinα) (−2πi(n+λ))^(s−1),
///
/// principal branches throughout, the two-sided tails resummed through the
/// Abel–Plana machinery at argument 1−s. Must agree with [`lerch_phi`]
/// wherever both converge.
pub fn lerch_phi_left(p: &LerchPoint, params: &EvalParams) -> Result<Complex> {
    params.validate()?;
    if !(p.lambda > 0.0 && p.lambda < 1.0) {
        return Err(Error::Domain(format!(
            "lerch_phi_left needs lambda strictly inside (0, 1), got {}",
            p.lambda
        )));
    }
    if !(p.alpha > 0.0 && p.alpha < 1.0) {
        return Err(Error::Domain(format!(
            "lerch_phi_left needs alpha strictly inside (0, 1), got {}",
            p.alpha
        )));
    }
    if p.s.re >= 1.0 {
        return Err(Error::Region(format!(
            "the expansion in alpha holds for Re s < 1, got sigma = {}",
            p.s.re
        )));
    }
    let s = p.s;
    let g = gamma(Complex::new(1.0, 0.0) - s)?;
    let m = 12i64;

    let mut sum = Complex::new(0.0, 0.0);
    for n in (-m + 1)..m {
        let base = Complex::new(0.0, -2.0 * PI) * (n as f64 + p.lambda);
        sum += unit_phase(-(n as f64) * p.alpha) * pow_principal_scalar(base, s - 1.0)?;
    }
    // Σ_{n≥M} e^(−2πinα)(−2πi(n+λ))^(s−1)
    //   = (−2πi)^(s−1) e^(−2πiMα) Σ_{j≥0} e^(2πij(1−α)) (j+M+λ)^(s−1)
    let minus_two_pi_i = Complex::new(0.0, -2.0 * PI);
    let plus_two_pi_i = Complex::new(0.0, 2.0 * PI);
    let tail_plus = pow_principal_scalar(minus_two_pi_i, s - 1.0)?
        * unit_phase(-(m as f64) * p.alpha)
        * abel_plana_tail(
            1.0 - p.alpha,
            m as f64 + p.lambda,
            Complex::new(1.0, 0.0) - s,
            params,
        )?;
    // Σ_{n≤−M} e^(−2πinα)(−2πi(n+λ))^(s−1), n = −j−M: the bases turn into
    // +2πi(j+M−λ) and the phases into e^(2πijα)
    let tail_minus = pow_principal_scalar(plus_two_pi_i, s - 1.0)?
        * unit_phase(m as f64 * p.alpha)
        * abel_plana_tail(
            p.alpha,
            m as f64 - p.lambda,
            Complex::new(1.0, 0.0) - s,
            params,
        )?;

    Ok(unit_phase(-p.lambda * p.alpha) * g * (sum + tail_plus + tail_minus))
}

/// φ(λ, α, s) as a function of λ with (s, α) fixed, σ > 0, with per-node
/// prefactors of the integral representation cached across calls. This is
/// what the λ-integral oracles use: one construction, many λ evaluations.
pub struct LerchLambdaSeries {
    gamma_s: Complex,
    /// per level: (t, e^(−t), prefactor t^(s−1) e^(−αt) · jacobian · weight)
    levels: Vec<Vec<(f64, f64, Complex)>>,
    tolerance: f64,
}

impl LerchLambdaSeries {
    pub fn new(s: Complex, alpha: f64, params: &EvalParams) -> Result<Self> {
        if s.re <= 0.0 {
            return Err(Error::Region(format!(
                "the lambda-series evaluator needs Re s > 0, got {}",
                s.re
            )));
        }
        if !(alpha > 0.0) {
            return Err(Error::Domain(format!(
                "lerch alpha must be positive, got {alpha}"
            )));
        }
        params.validate()?;
        let cap = params.quad_level.min(crate::quadrature::MAX_LEVEL);
        let mut levels = Vec::with_capacity(cap + 1);
        for level in 0..=cap {
            let mut nodes = Vec::new();
            for (distance, w) in crate::quadrature::level_nodes(level) {
                let mut xs = vec![distance];
                let right = 1.0 - distance;
                if right < 1.0 && right != distance {
                    xs.push(right);
                }
                for x in xs {
                    let t = x / (1.0 - x);
                    let jac = 1.0 / ((1.0 - x) * (1.0 - x));
                    let exponent = (s - 1.0) * t.ln() - alpha * t;
                    if exponent.re < -745.0 {
                        continue;
                    }
                    nodes.push((t, (-t).exp(), exponent.exp() * jac * w));
                }
            }
            levels.push(nodes);
        }
        Ok(Self {
            gamma_s: gamma(s)?,
            levels,
            tolerance: params.tolerance,
        })
    }

    /// φ(λ, α, s) at the cached (s, α); adaptive in the quadrature level.
    pub fn eval(&self, lambda: f64) -> Result<Complex> {
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(Error::Domain(format!(
                "lambda must lie strictly inside (0, 1), got {lambda}"
            )));
        }
        let z = unit_phase(lambda);
        let theta = 2.0 * PI * wrap_lambda(lambda);
        let mut partial = Complex::new(0.0, 0.0);
        let mut previous: Option<Complex> = None;
        let mut last_diff = f64::INFINITY;
        for (level, nodes) in self.levels.iter().enumerate() {
            for &(t, e_t, pref) in nodes {
                // near t = 0 the denominator 1 − e^(2πiλ−t) cancels; go
                // through the complex expm1 with the wrapped phase there
                let denom = if t < 0.7 {
                    -expm1_complex(Complex::new(-t, theta))
                } else {
                    1.0 - z * e_t
                };
                // scaled division: both pref and denom can sit deep in the
                // subnormal range at the edge nodes, where the plain
                // complex quotient underflows to NaN
                let m = denom.re.abs().max(denom.im.abs());
                partial += (pref / (denom / m)) / m;
            }
            let estimate = 0.5f64.powi(level as i32) * partial;
            if let Some(prev) = previous {
                let diff: f64 = (estimate - prev).norm();
                if level >= 3 && diff <= self.tolerance * (1.0 + estimate.norm()) {
                    return Ok(estimate / self.gamma_s);
                }
                last_diff = diff;
            }
            previous = Some(estimate);
        }
        Err(Error::QuadratureLevelCap {
            estimate: last_diff,
            evaluations: self.levels.iter().map(Vec::len).sum(),
        })
    }
}
