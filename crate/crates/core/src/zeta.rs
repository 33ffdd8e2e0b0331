//! The Hurwitz zeta function ζ(s, α) = Σ_{n≥0} (n+α)^(−s), its shifted
//! variants ζₖ(s, α) = ζ(s, α+k), the Riemann case ζ(s) = ζ(s, 1), and
//! s-derivatives of all of them, evaluated anywhere away from the pole at
//! s = 1 by Euler–Maclaurin summation carried out in jet arithmetic.
//!
//! The power series of ζₖ⁽ʳ⁾(s, α) in α is also provided as an independent
//! route for cross-method verification.

use crate::bernoulli::{bernoulli_number, MAX_INDEX};
use crate::error::{Error, Result};
use crate::jet::{pow_principal, Jet};
use crate::params::EvalParams;
use crate::Complex;

/// Refuse evaluation closer to the pole than this.
const POLE_RADIUS: f64 = 1e-8;

/// A point for ζₖ⁽ʳ⁾(s, α): ζ shifted by `shift`, differentiated `order`
/// times with respect to s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzPoint {
    pub s: Complex,
    pub alpha: f64,
    pub shift: u32,
    pub order: u32,
}

impl HurwitzPoint {
    pub fn new(s: Complex, alpha: f64) -> Self {
        Self {
            s,
            alpha,
            shift: 0,
            order: 0,
        }
    }

    pub fn with_shift(mut self, shift: u32) -> Self {
        self.shift = shift;
        self
    }

    pub fn with_order(mut self, order: u32) -> Self {
        self.order = order;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha + self.shift as f64 > 0.0) {
            return Err(Error::Domain(format!(
                "hurwitz point needs alpha + shift > 0, got {} + {}",
                self.alpha, self.shift
            )));
        }
        if (self.s - 1.0).norm() < POLE_RADIUS {
            return Err(Error::PoleAtOne);
        }
        Ok(())
    }
}

/// A point for the Lerch zeta function φ(λ, α, s) = Σ_{n≥0} e^(2πiλn)(n+α)^(−s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchPoint {
    pub lambda: f64,
    pub alpha: f64,
    pub s: Complex,
}

impl LerchPoint {
    pub fn new(lambda: f64, alpha: f64, s: Complex) -> Self {
        Self { lambda, alpha, s }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0 && self.lambda <= 1.0) {
            return Err(Error::Domain(format!(
                "lerch point needs lambda in (0, 1], got {}",
                self.lambda
            )));
        }
        if !(self.alpha > 0.0) {
            return Err(Error::Domain(format!(
                "lerch point needs alpha > 0, got {}",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// Euler–Maclaurin evaluation of the jet of s ↦ ζ(s, a) at `s` to the given
/// order, for a > 0 and s away from 1:
///
/// ζ(s, a) = Σ_{n<N} (n+a)^(−s) + (N+a)^(1−s)/(s−1) + ½(N+a)^(−s)
///         + Σ_{j=1..M} B₂ⱼ/(2j)! · (s)₂ⱼ₋₁ · (N+a)^(−s−2j+1)
///
/// with N = max(10, ⌈|Im s|⌉ + 10) raised further when |s| is large so the
/// Bernoulli terms keep decreasing, and M = `params.em_order`.
pub(crate) fn euler_maclaurin_jet(
    s: Complex,
    a: f64,
    order: usize,
    params: &EvalParams,
) -> Result<Jet> {
    if (s - 1.0).norm() < POLE_RADIUS {
        return Err(Error::PoleAtOne);
    }
    if !(a > 0.0) {
        return Err(Error::Domain(format!(
            "euler-maclaurin needs a positive second argument, got {a}"
        )));
    }
    let m = params.em_order.min(MAX_INDEX / 2).max(1);
    let n_terms = 10.0_f64
        .max(s.im.abs().ceil() + 10.0)
        .max(((s.norm() + 2.0 * m as f64 + 2.0) / 4.0).ceil()) as usize;

    let s_jet = Jet::variable(s, order);
    let minus_s = -&s_jet;

    let mut total = Jet::constant(Complex::new(0.0, 0.0), order);
    for n in 0..n_terms {
        total = &total + &pow_principal(Complex::new(n as f64 + a, 0.0), &minus_s)?;
    }

    let base = n_terms as f64 + a;
    let base_c = Complex::new(base, 0.0);
    let one_minus_s = minus_s.add_scalar(Complex::new(1.0, 0.0));
    let integral = pow_principal(base_c, &one_minus_s)?
        .div(&s_jet.add_scalar(Complex::new(-1.0, 0.0)))?;
    total = &total + &integral;

    let pow_minus_s = pow_principal(base_c, &minus_s)?;
    total = &total + &pow_minus_s.scale(Complex::new(0.5, 0.0));

    // Bernoulli corrections, with (s)_{2j−1} and (N+a)^(−s−2j+1) updated
    // incrementally.
    let mut rising = s_jet.clone(); // (s)_1
    let mut base_pow = pow_minus_s.scale(Complex::new(1.0 / base, 0.0)); // (N+a)^(−s−1)
    let mut factorial = 2.0; // (2j)!
    for j in 1..=m {
        let b2j = bernoulli_number(2 * j)?;
        let term = rising
            .mul(&base_pow)?
            .scale(Complex::new(b2j / factorial, 0.0));
        total = &total + &term;
        let term_size: f64 = term.coeffs().iter().map(|c| c.norm()).sum();
        let total_size: f64 = total.coeffs().iter().map(|c| c.norm()).sum();
        if term_size <= 0.01 * params.tolerance * total_size {
            break;
        }
        if j < m {
            rising = rising
                .mul(&s_jet.add_scalar(Complex::new(2.0 * j as f64 - 1.0, 0.0)))?
                .mul(&s_jet.add_scalar(Complex::new(2.0 * j as f64, 0.0)))?;
            base_pow = base_pow.scale(Complex::new(1.0 / (base * base), 0.0));
            factorial *= (2.0 * j as f64 + 1.0) * (2.0 * j as f64 + 2.0);
        }
    }

    if !total.is_finite() {
        return Err(Error::NonFinite("euler-maclaurin zeta"));
    }
    Ok(total)
}

/// Jet of ζ_shift(s, α) = ζ(s, α + shift) at s, derivative entries up to
/// `p.order`.
pub fn hurwitz_zeta_jet(p: &HurwitzPoint, params: &EvalParams) -> Result<Jet> {
    p.validate()?;
    params.validate()?;
    euler_maclaurin_jet(p.s, p.alpha + p.shift as f64, p.order as usize, params)
}

/// ζₖ⁽ʳ⁾(s, α) via the shift of argument ζ(s, α+k), cross-checked against
/// the subtraction route ζ(s, α) − Σ_{n<k} (n+α)^(−s) whenever the latter
/// is defined (α > 0). The shift route is returned.
pub fn hurwitz_shifted(
    s: Complex,
    alpha: f64,
    k: u32,
    r: u32,
    params: &EvalParams,
) -> Result<Jet> {
    let point = HurwitzPoint::new(s, alpha).with_shift(k).with_order(r);
    let shift_route = hurwitz_zeta_jet(&point, params)?;
    if alpha > 0.0 && k > 0 {
        let full = euler_maclaurin_jet(s, alpha, r as usize, params)?;
        let s_jet = Jet::variable(s, r as usize);
        let minus_s = -&s_jet;
        let mut head = Jet::constant(Complex::new(0.0, 0.0), r as usize);
        for n in 0..k {
            head = &head + &pow_principal(Complex::new(n as f64 + alpha, 0.0), &minus_s)?;
        }
        let sub_route = &full - &head;
        let diff: f64 = shift_route
            .coeffs()
            .iter()
            .zip(sub_route.coeffs())
            .map(|(a, b)| (a - b).norm())
            .sum();
        let scale: f64 = shift_route.coeffs().iter().map(|c| c.norm()).sum();
        if diff > 1e-8 * (1.0 + scale) {
            return Err(Error::Inconsistent(format!(
                "shift and subtraction routes disagree by {diff:.3e} at s = {s}, alpha = {alpha}, k = {k}"
            )));
        }
    }
    Ok(shift_route)
}

/// Jet of the Riemann zeta function ζ(s) = ζ(s, 1).
pub fn riemann_zeta_jet(s: Complex, r: u32, params: &EvalParams) -> Result<Jet> {
    hurwitz_zeta_jet(&HurwitzPoint::new(s, 1.0).with_order(r), params)
}

/// ζₖ⁽ʳ⁾(s, α) by the power series in α around 0,
///
/// ζₖ⁽ʳ⁾(s, α) = ∂ʳ/∂sʳ ζₖ(s) + Σ_{n≥1} (−α)ⁿ/n! ∂ʳ/∂sʳ (s(s+1)…(s+n−1) ζₖ(s+n)),
///
/// valid for |α| < k, the Pochhammer-times-zeta factor and its derivatives
/// carried in jet arithmetic. α may be complex here.
pub fn taylor_alpha_eval(
    s: Complex,
    alpha: Complex,
    k: u32,
    r: u32,
    params: &EvalParams,
) -> Result<Complex> {
    if k < 1 {
        return Err(Error::Domain("taylor_alpha_eval needs k >= 1".into()));
    }
    let ratio = alpha.norm() / k as f64;
    if ratio >= 1.0 {
        return Err(Error::Domain(format!(
            "taylor_alpha_eval needs |alpha| < k, got |{alpha}| vs {k}"
        )));
    }
    params.validate()?;
    let order = r as usize;
    let kf = k as f64;
    let s_jet = Jet::variable(s, order);

    // ζ_k(s) = ζ(s, k)
    let zeta_at = |shift: usize| -> Result<Jet> {
        euler_maclaurin_jet(s + shift as f64, kf, order, params).map_err(|e| match e {
            Error::PoleAtOne => Error::Domain(format!(
                "power series hits the zeta pole at shifted argument s + {shift} = 1"
            )),
            other => other,
        })
    };

    let mut total = zeta_at(0)?;
    // product jet P_n = Π_{i<n} (−α)(s+i)/(i+1), updated term by term
    let mut product = Jet::constant(Complex::new(1.0, 0.0), order);
    let max_terms = 400usize;
    let mut converged = false;
    for n in 1..=max_terms {
        let i = (n - 1) as f64;
        product = product
            .mul(&s_jet.add_scalar(Complex::new(i, 0.0)))?
            .scale(-alpha / n as f64);
        let term = product.mul(&zeta_at(n)?)?;
        total = &total + &term;
        let term_size: f64 = term.coeffs().iter().map(|c| c.norm()).sum();
        let total_size: f64 = total.coeffs().iter().map(|c| c.norm()).sum();
        // geometric tail: remaining terms are bounded by term_size·q/(1−q)
        let q = ratio * (1.0 + (s.norm() + order as f64) / n as f64);
        if n >= 8
            && q < 1.0
            && term_size * q / (1.0 - q) <= params.tolerance * total_size.max(1e-300)
        {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "alpha power series",
            iterations: max_terms,
        });
    }
    Ok(total.derivative(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn params() -> EvalParams {
        EvalParams::default()
    }

    /// Bernoulli polynomial B_m(x) for the ζ(1−m, α) = −B_m(α)/m oracle.
    fn bernoulli_poly(m: usize, x: f64) -> f64 {
        let coeffs: &[&[f64]] = &[
            &[1.0],
            &[-0.5, 1.0],
            &[1.0 / 6.0, -1.0, 1.0],
            &[0.0, 0.5, -1.5, 1.0],
            &[-1.0 / 30.0, 0.0, 1.0, -2.0, 1.0],
        ];
        coeffs[m].iter().rev().fold(0.0, |acc, &a| acc * x + a)
    }

    #[test]
    fn basel_value() {
        // ζ(2, 1) = π²/6, against a direct-summation oracle.
        let direct: f64 = (1..200_000u64).map(|n| (n as f64).powi(-2)).sum::<f64>()
            + 1.0 / 200_000.0; // integral tail
        let jet = hurwitz_zeta_jet(&HurwitzPoint::new(c(2.0, 0.0), 1.0), &params()).unwrap();
        assert_relative_eq!(jet.value().re, direct, max_relative = 1e-9);
        assert_relative_eq!(jet.value().re, PI * PI / 6.0, max_relative = 1e-13);
        assert!(jet.value().im.abs() < 1e-15);
    }

    #[test]
    fn value_at_zero_is_half_minus_alpha() {
        // ζ(0, α) = −B₁(α) = 1/2 − α
        let jet = hurwitz_zeta_jet(&HurwitzPoint::new(c(0.0, 0.0), 0.25), &params()).unwrap();
        assert_relative_eq!(jet.value().re, -bernoulli_poly(1, 0.25), max_relative = 1e-13);
        assert_relative_eq!(jet.value().re, 0.25, max_relative = 1e-13);
    }

    #[test]
    fn negative_integer_values_from_bernoulli_polynomials() {
        // ζ(1−m, α) = −B_m(α)/m
        for &(m, alpha) in &[(2usize, 0.5), (2, 1.0), (3, 0.3), (4, 0.7)] {
            let s = c(1.0 - m as f64, 0.0);
            let jet = hurwitz_zeta_jet(&HurwitzPoint::new(s, alpha), &params()).unwrap();
            let expected = -bernoulli_poly(m, alpha) / m as f64;
            // absolute floor: at σ = −3 the cancellation noise is ~1e-12
            assert_relative_eq!(jet.value().re, expected, max_relative = 1e-10, epsilon = 1e-11);
        }
    }

    #[test]
    fn derivative_at_zero() {
        // ζ'(0, 1) = −½ log 2π (the α = 1 case of Kummer's identity)
        let jet = hurwitz_zeta_jet(
            &HurwitzPoint::new(c(0.0, 0.0), 1.0).with_order(1),
            &params(),
        )
        .unwrap();
        assert_relative_eq!(
            jet.derivative(1).re,
            -0.5 * (2.0 * PI).ln(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn pole_refused() {
        assert_eq!(
            hurwitz_zeta_jet(&HurwitzPoint::new(c(1.0, 0.0), 1.0), &params()),
            Err(Error::PoleAtOne)
        );
        assert!(hurwitz_zeta_jet(&HurwitzPoint::new(c(1.0, 1e-9), 1.0), &params()).is_err());
        assert!(hurwitz_zeta_jet(&HurwitzPoint::new(c(2.0, 0.0), -1.0), &params()).is_err());
    }

    #[test]
    fn shifted_anchor() {
        // ζ₁(2, 1/2) = ζ(2, 3/2) = π²/2 − 4
        let jet = hurwitz_shifted(c(2.0, 0.0), 0.5, 1, 0, &params()).unwrap();
        assert_relative_eq!(jet.value().re, PI * PI / 2.0 - 4.0, max_relative = 1e-12);
    }

    #[test]
    fn shift_zero_is_plain_hurwitz() {
        let a = hurwitz_shifted(c(-0.5, 0.7), 0.6, 0, 1, &params()).unwrap();
        let b = hurwitz_zeta_jet(
            &HurwitzPoint::new(c(-0.5, 0.7), 0.6).with_order(1),
            &params(),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn subtraction_route_example() {
        // ζ₃(1/2, 1) = ζ(1/2) − 1 − 2^(−1/2) − 3^(−1/2)
        let shifted = hurwitz_shifted(c(0.5, 0.0), 1.0, 3, 0, &params()).unwrap();
        let zeta_half = riemann_zeta_jet(c(0.5, 0.0), 0, &params()).unwrap();
        let expected = zeta_half.value().re - 1.0 - 0.5f64.sqrt() - 1.0 / 3.0f64.sqrt();
        assert_relative_eq!(shifted.value().re, expected, max_relative = 1e-12);
    }

    #[test]
    fn riemann_values() {
        let p = params();
        assert_relative_eq!(
            riemann_zeta_jet(c(2.0, 0.0), 0, &p).unwrap().value().re,
            PI * PI / 6.0,
            max_relative = 1e-13
        );
        // ζ(−1) = −B₂(1)/2 = −1/12
        assert_relative_eq!(
            riemann_zeta_jet(c(-1.0, 0.0), 0, &p).unwrap().value().re,
            -bernoulli_poly(2, 1.0) / 2.0,
            max_relative = 1e-12
        );
        // ζ'(0) = ζ'(0, 1), cross-module consistency
        let a = riemann_zeta_jet(c(0.0, 0.0), 1, &p).unwrap().derivative(1);
        let b = hurwitz_zeta_jet(&HurwitzPoint::new(c(0.0, 0.0), 1.0).with_order(1), &p)
            .unwrap()
            .derivative(1);
        assert_eq!(a, b);
        assert_relative_eq!(a.re, -0.9189385332046727, max_relative = 1e-12);
    }

    #[test]
    fn region_agreement_with_direct_sums() {
        // For σ > 1.5 the continuation matches a 10⁶-term partial sum plus
        // integral tail to 1e-9.
        let p = params();
        let n: u64 = 1_000_000;
        for &(s, alpha) in &[
            (c(2.0, 0.0), 0.7),
            (c(1.75, 1.0), 1.0),
            (c(3.5, -2.0), 0.3),
        ] {
            let mut partial = c(0.0, 0.0);
            for m in 0..n {
                let base = m as f64 + alpha;
                partial += (-s * base.ln()).exp();
            }
            let edge = n as f64 + alpha;
            let tail = (-(s - 1.0) * edge.ln()).exp() / (s - 1.0) + 0.5 * (-s * edge.ln()).exp();
            let oracle = partial + tail;
            let value = hurwitz_zeta_jet(&HurwitzPoint::new(s, alpha), &p)
                .unwrap()
                .value();
            assert!(
                (value - oracle).norm() <= 1e-9 * oracle.norm(),
                "direct-sum mismatch at s = {s}: {value} vs {oracle}"
            );
        }
    }

    #[test]
    fn jet_derivatives_match_finite_differences() {
        let p = params();
        let h = 1e-3;
        for &(s, alpha) in &[(c(0.3, 0.8), 0.4), (c(-1.2, 0.0), 1.0), (c(2.5, -0.5), 0.9)] {
            let jet = hurwitz_zeta_jet(&HurwitzPoint::new(s, alpha).with_order(2), &p).unwrap();
            let at = |ds: f64| {
                hurwitz_zeta_jet(&HurwitzPoint::new(s + ds, alpha), &p)
                    .unwrap()
                    .value()
            };
            let d1 = (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) / (12.0 * h);
            let d2 = (-at(2.0 * h) + 16.0 * at(h) - 30.0 * at(0.0) + 16.0 * at(-h)
                - at(-2.0 * h))
                / (12.0 * h * h);
            assert!(
                (jet.derivative(1) - d1).norm() <= 1e-6 * d1.norm(),
                "first derivative mismatch at s = {s}"
            );
            assert!(
                (jet.derivative(2) - d2).norm() <= 1e-6 * d2.norm(),
                "second derivative mismatch at s = {s}"
            );
        }
    }

    #[test]
    fn taylor_alpha_at_zero_is_zeta() {
        // α = 0 leaves only the constant term: ζ₁(s, 0) = ζ(s)
        let p = params();
        for &s in &[c(2.0, 0.0), c(-0.5, 1.0)] {
            let series = taylor_alpha_eval(s, c(0.0, 0.0), 1, 0, &p).unwrap();
            let direct = riemann_zeta_jet(s, 0, &p).unwrap().value();
            assert!((series - direct).norm() <= 1e-12 * direct.norm().max(1.0));
        }
    }

    #[test]
    fn taylor_alpha_matches_shift_route() {
        let p = params();
        let series = taylor_alpha_eval(c(2.0, 0.0), c(0.5, 0.0), 1, 0, &p).unwrap();
        assert_relative_eq!(series.re, PI * PI / 2.0 - 4.0, max_relative = 1e-11);

        let series = taylor_alpha_eval(c(-0.5, 0.0), c(0.3, 0.0), 2, 1, &p).unwrap();
        let shift = hurwitz_shifted(c(-0.5, 0.0), 0.3, 2, 1, &p)
            .unwrap()
            .derivative(1);
        assert!(
            (series - shift).norm() <= 1e-9 * shift.norm(),
            "{series} vs {shift}"
        );
    }

    #[test]
    fn taylor_alpha_complex_alpha_against_direct_sum() {
        // σ = 3 converges absolutely; direct sum with integral tail.
        let p = params();
        let s = c(3.0, 0.0);
        let alpha = c(0.0, 0.3);
        let series = taylor_alpha_eval(s, alpha, 1, 0, &p).unwrap();
        let n = 200_000u64;
        let mut direct = c(0.0, 0.0);
        for m in 1..n {
            // ζ₁(s, α) = Σ_{m≥1} (m+α)^(−s)
            direct += (-s * (alpha + m as f64).ln()).exp();
        }
        let edge = alpha + n as f64;
        direct += (-(s - 1.0) * edge.ln()).exp() / (s - 1.0) + 0.5 * (-s * edge.ln()).exp();
        assert!(
            (series - direct).norm() <= 1e-9 * direct.norm(),
            "{series} vs {direct}"
        );
    }

    #[test]
    fn taylor_alpha_domain_errors() {
        let p = params();
        assert!(taylor_alpha_eval(c(2.0, 0.0), c(1.0, 0.0), 1, 0, &p).is_err());
        assert!(taylor_alpha_eval(c(2.0, 0.0), c(0.5, 0.0), 0, 0, &p).is_err());
        // s + n hits the pole at 1
        assert!(taylor_alpha_eval(c(-3.0, 0.0), c(0.5, 0.0), 1, 0, &p).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        /// ζ(s, α) − ζ(s, α+1) = α^(−s), relative 1e-11. σ is kept above
        /// −1.75: further left, the cancellation between the Euler–Maclaurin
        /// head and integral terms exceeds that target in f64.
        #[test]
        fn recurrence_in_alpha(
            sr in -1.75f64..3.0, si in -3.0f64..3.0,
            alpha in 0.1f64..3.0,
        ) {
            let s = c(sr, si);
            prop_assume!((s - 1.0).norm() > 0.05);
            let p = params();
            let a = hurwitz_zeta_jet(&HurwitzPoint::new(s, alpha), &p).unwrap().value();
            let b = hurwitz_zeta_jet(&HurwitzPoint::new(s, alpha + 1.0), &p).unwrap().value();
            let rhs = (-s * alpha.ln()).exp();
            prop_assert!(
                ((a - b) - rhs).norm() <= 1e-11 * rhs.norm().max(1e-8),
                "recurrence failed: {} vs {}", a - b, rhs
            );
        }
    }
}
