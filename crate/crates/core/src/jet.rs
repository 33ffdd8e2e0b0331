//! Truncated Taylor (jet) arithmetic over complex scalars.
//!
//! A [`Jet`] of order r stores the coefficients c₀..c_r of a truncated
//! expansion f(s₀ + h) = Σ cₖ hᵏ, i.e. cₖ = f⁽ᵏ⁾(s₀)/k!. Propagating jets
//! through arithmetic mechanizes term-by-term differentiation with respect
//! to s, which is how every ∂ʳ/∂sʳ in this crate is produced. An order-0
//! jet behaves exactly like a bare complex number.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::Complex;

/// Value plus first r derivatives at a fixed expansion point, stored as
/// Taylor coefficients (`coeffs[k]` = k-th derivative / k!).
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    coeffs: Vec<Complex>,
}

impl Jet {
    /// Jet of a constant: value and zero derivatives.
    pub fn constant(value: Complex, order: usize) -> Self {
        let mut coeffs = vec![Complex::new(0.0, 0.0); order + 1];
        coeffs[0] = value;
        Self { coeffs }
    }

    /// Jet of the identity s ↦ s at the expansion point `value`:
    /// unit first derivative, zero beyond.
    pub fn variable(value: Complex, order: usize) -> Self {
        let mut jet = Self::constant(value, order);
        if order >= 1 {
            jet.coeffs[1] = Complex::new(1.0, 0.0);
        }
        jet
    }

    /// Builds a jet directly from Taylor coefficients.
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<Complex>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least a value coefficient");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The value coefficient c₀.
    pub fn value(&self) -> Complex {
        self.coeffs[0]
    }

    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// The k-th derivative at the expansion point, i.e. k! · c_k.
    pub fn derivative(&self, k: usize) -> Complex {
        let mut fact = 1.0;
        for i in 2..=k {
            fact *= i as f64;
        }
        self.coeffs[k] * fact
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::JetOrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn scale(&self, factor: Complex) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add_scalar(&self, value: Complex) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += value;
        out
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex::new(0.0, 0.0); n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            for j in 0..=k {
                *c += self.coeffs[j] * other.coeffs[k - j];
            }
        }
        Ok(Self { coeffs })
    }

    /// Quotient jet; errors when the divisor's value coefficient vanishes.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let b0 = other.coeffs[0];
        if b0.norm() == 0.0 {
            return Err(Error::JetDivisionByZero);
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex::new(0.0, 0.0); n];
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= other.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / b0;
        }
        Ok(Self { coeffs })
    }

    /// exp of a jet: e₀ = exp(c₀), k·eₖ = Σ_{j=1..k} j·cⱼ·e_{k−j}.
    pub fn exp(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex::new(0.0, 0.0); n];
        coeffs[0] = self.coeffs[0].exp();
        for k in 1..n {
            let mut acc = Complex::new(0.0, 0.0);
            for j in 1..=k {
                acc += (j as f64) * self.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / k as f64;
        }
        Self { coeffs }
    }

    /// Principal-branch logarithm of a jet; errors on zero value part.
    pub fn ln(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() == 0.0 {
            return Err(Error::JetLogOfZero);
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex::new(0.0, 0.0); n];
        coeffs[0] = a0.ln();
        for k in 1..n {
            let mut acc = (k as f64) * self.coeffs[k];
            for j in 1..k {
                acc -= (j as f64) * coeffs[j] * self.coeffs[k - j];
            }
            coeffs[k] = acc / ((k as f64) * a0);
        }
        Ok(Self { coeffs })
    }

    /// Jet raised to a constant complex exponent, exp(c · ln self).
    pub fn pow_scalar(&self, exponent: Complex) -> Result<Self> {
        Ok(self.ln()?.scale(exponent).exp())
    }

    /// Reciprocal jet.
    pub fn recip(&self) -> Result<Self> {
        Jet::constant(Complex::new(1.0, 0.0), self.order()).div(self)
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        assert_eq!(self.order(), rhs.order(), "jet order mismatch in add");
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        assert_eq!(self.order(), rhs.order(), "jet order mismatch in sub");
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        self.mul(rhs).expect("jet order mismatch in mul")
    }
}

/// Principal-branch complex power with a jet exponent:
/// baseᵉ = exp(e · Log base) with arg(base) ∈ (−π, π].
///
/// This is the single place the branch convention is fixed; every
/// (2πin)^(s−1)-style factor in the crate goes through here or through
/// [`pow_principal_scalar`].
pub fn pow_principal(base: Complex, exponent: &Jet) -> Result<Jet> {
    if base.norm() == 0.0 {
        return Err(Error::ZeroBase);
    }
    let log_base = base.ln();
    Ok(exponent.scale(log_base).exp())
}

/// Scalar case of [`pow_principal`].
pub fn pow_principal_scalar(base: Complex, exponent: Complex) -> Result<Complex> {
    if base.norm() == 0.0 {
        return Err(Error::ZeroBase);
    }
    Ok((exponent * base.ln()).exp())
}
