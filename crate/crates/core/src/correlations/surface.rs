//! The universal conditional-entropy surface δ̃(x, y).

use crate::error::{Error, Result};
use crate::qmat::h2;

/// Slack on the |x| + |y| ≤ 1 domain.
pub const SQUARE_TOL: f64 = 1e-12;

/// Post-measurement conditional entropy as a function of the reduced
/// coordinates (x, y), in bits.
///
/// δ̃(x, y) = Σ_k (1 + f_k x)/2 · h[(1 + f_k y/(1 + f_k x))/2] with f₀ = 1,
/// f₁ = −1. Defined on the square |x| + |y| ≤ 1.
pub fn delta_tilde(x: f64, y: f64) -> Result<f64> {
    if !(x.abs() + y.abs() <= 1.0 + SQUARE_TOL) {
        return Err(Error::domain(format!("({x}, {y}) lies outside |x| + |y| <= 1")));
    }
    Ok(delta_tilde_unchecked(x, y))
}

#[inline]
pub(crate) fn delta_tilde_unchecked(x: f64, y: f64) -> f64 {
    [1.0, -1.0]
        .into_iter()
        .map(|f: f64| {
            let mu = 1.0 + f * x;
            if mu <= 0.0 {
                0.0
            } else {
                0.5 * mu * h2(0.5 * (1.0 + f * y / mu))
            }
        })
        .sum()
}
