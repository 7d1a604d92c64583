//! Shannon entropy and percentage compression of a singular-value
//! spectrum. Natural logarithms throughout; zero singular values
//! contribute nothing, so full and rank-truncated spectra agree.

use crate::error::{Error, Result};

/// Normalized spectrum with its entropy H (nats) and compression C
/// (percent).
#[derive(Debug, Clone)]
pub struct MeasureReport {
    pub normalized: Vec<f64>,
    pub h: f64,
    pub c: f64,
}

/// H = -sum sigma_hat ln sigma_hat over the sum-normalized singular
/// values, and C = (1 - H / ln n) * 100.
pub fn entropy_compression(sigmas: &[f64], n: usize) -> Result<MeasureReport> {
    let total: f64 = sigmas.iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroSpectrum);
    }
    let normalized: Vec<f64> = sigmas.iter().map(|&s| s / total).collect();
    let h: f64 = normalized
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum();
    let c = (1.0 - h / (n as f64).ln()) * 100.0;
    Ok(MeasureReport { normalized, h, c })
}

/// Remaps a square's elements from 1..n^2 onto 0..n^2-1.
pub fn zero_based_shift(m: &crate::matrix::IntSquareMatrix) -> crate::matrix::IntSquareMatrix {
    m.shift_to_zero_based()
}
