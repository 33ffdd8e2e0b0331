//! Bernoulli numbers B₀..B₆₀.
//!
//! Computed once, exactly, by the defining recurrence
//! Σ_{j=0}^{m} C(m+1, j) B_j = 0 in big-rational arithmetic, then stored
//! as doubles. The Euler–Maclaurin evaluator never needs indices beyond 60
//! at tolerance 1e-12.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported index.
pub const MAX_INDEX: usize = 60;

static TABLE: OnceLock<Vec<f64>> = OnceLock::new();

fn build_table() -> Vec<f64> {
    // binom[j] walks through C(m+1, j) row by row.
    let mut b: Vec<BigRational> = Vec::with_capacity(MAX_INDEX + 1);
    b.push(BigRational::one());
    for m in 1..=MAX_INDEX {
        // B_m = -1/(m+1) * Σ_{j<m} C(m+1, j) B_j
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bj;
            // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1)
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        let bm = -acc / BigRational::from_integer(BigInt::from(m + 1));
        b.push(bm);
    }
    b.iter()
        .map(|r| r.to_f64().expect("bernoulli number fits in f64"))
        .collect()
}

fn table() -> &'static [f64] {
    TABLE.get_or_init(build_table)
}

/// B_k for even k ≤ 60 (and B₀ = 1). Odd k > 1 are refused: callers never
/// need them and B_odd = 0 is handled by convention at call sites.
pub fn bernoulli_number(k: usize) -> Result<f64> {
    if k > MAX_INDEX {
        return Err(Error::Domain(format!(
            "bernoulli index {k} beyond table maximum {MAX_INDEX}"
        )));
    }
    if k % 2 == 1 && k > 1 {
        return Err(Error::Domain(format!(
            "odd bernoulli index {k} (B_odd = 0 by convention)"
        )));
    }
    Ok(table()[k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn anchor_values() {
        assert_eq!(bernoulli_number(0).unwrap(), 1.0);
        assert_relative_eq!(bernoulli_number(2).unwrap(), 1.0 / 6.0, max_relative = 1e-15);
        assert_relative_eq!(
            bernoulli_number(12).unwrap(),
            -691.0 / 2730.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(bernoulli_number(3).is_err());
        assert!(bernoulli_number(62).is_err());
    }

    #[test]
    fn matches_even_zeta_values() {
        // Independent oracle: B_{2k} = (-1)^{k+1} 2 (2k)! ζ(2k) / (2π)^{2k},
        // with ζ(2k) summed directly plus an integral tail correction.
        for k in 1..=15usize {
            let two_k = 2 * k;
            let n_max = 200u64;
            let partial: f64 = (1..=n_max).map(|n| (n as f64).powi(-(two_k as i32))).sum();
            let p = two_k as f64;
            let nf = n_max as f64;
            let tail = nf.powf(1.0 - p) / (p - 1.0) - 0.5 * nf.powf(-p)
                + (p / 12.0) * nf.powf(-p - 1.0);
            let zeta = partial + tail;
            let mut fact = 1.0;
            for i in 2..=two_k {
                fact *= i as f64;
            }
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let expected = sign * 2.0 * fact * zeta / (2.0 * PI).powi(two_k as i32);
            assert_relative_eq!(
                bernoulli_number(two_k).unwrap(),
                expected,
                max_relative = 1e-12
            );
        }
    }
}
