//! Shared evaluation parameters.

use crate::error::{Error, Result};

/// Truncation and tolerance knobs accepted by every numeric operation.
///
/// `truncation_n` is a floor for head-sum lengths (series evaluators may
/// raise it with |Im s|), `em_order` is the number of Bernoulli correction
/// terms in Euler–Maclaurin summation, `quad_level` caps tanh-sinh level
/// doubling, and `tolerance` is the requested relative accuracy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalParams {
    pub truncation_n: usize,
    pub em_order: usize,
    pub quad_level: usize,
    pub tolerance: f64,
}

impl Default for EvalParams {
    fn default() -> Self {
        Self {
            truncation_n: 32,
            em_order: 12,
            quad_level: 12,
            tolerance: 1e-12,
        }
    }
}

impl EvalParams {
    /// Parameters tuned for the quadrature oracle: 1e-9 requested accuracy,
    /// leaving headroom under the 1e-7-and-coarser assertion tolerances.
    pub fn oracle() -> Self {
        Self {
            tolerance: 1e-9,
            ..Self::default()
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn with_truncation(mut self, n: usize) -> Self {
        self.truncation_n = n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.truncation_n < 1 {
            return Err(Error::Domain("truncation_n must be >= 1".into()));
        }
        if self.em_order < 1 {
            return Err(Error::Domain("em_order must be >= 1".into()));
        }
        if self.quad_level < 1 {
            return Err(Error::Domain("quad_level must be >= 1".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::Domain("tolerance must be positive".into()));
        }
        Ok(())
    }
}
