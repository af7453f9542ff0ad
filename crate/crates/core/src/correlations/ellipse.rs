//! Minimization of δ̃ over the image of the measurement directions.
//!
//! A projective measurement on B with Bloch direction **n** maps to the point
//! (x, y) = (a₁n_x + a₃n_z, b₁n_x + b₃n_z). As **n** ranges over the sphere,
//! (n_x, n_z) fills the unit disk and (x, y) fills the ellipse
//! A x² + 2B xy + C y² ≤ 1. δ̃ is concave, so its minimum sits on the rim.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::optimize::golden_section;
use crate::qmat::h2;
use crate::states::CanonicalParams;

use super::surface::delta_tilde_unchecked;

/// Below this value of s₀ s₁ sin φ the ellipse is treated as collapsed.
pub const DEGENERATE_TOL: f64 = 1e-12;
/// Boundary angles scanned before refinement.
pub const BOUNDARY_SCAN_POINTS: usize = 512;
/// Bracket width at which the boundary refinement stops.
pub const BOUNDARY_ANGLE_TOL: f64 = 1e-10;
/// Samples along a collapsed (segment) domain.
pub const SEGMENT_SCAN_POINTS: usize = 101;

/// The quadratic form A x² + 2B xy + C y² ≤ 1 bounding the reachable (x, y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseDomain {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Semi-axes (r_x, r_y) along the coordinate axes; present only when B = 0.
    pub semi_axes: Option<(f64, f64)>,
}

impl EllipseDomain {
    /// A domain given directly by its coefficients. Must be positive definite.
    pub fn from_coefficients(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && c > 0.0 && a * c - b * b > 0.0) {
            return Err(Error::domain(format!(
                "quadratic form (A={a}, B={b}, C={c}) is not positive definite"
            )));
        }
        let semi_axes = (b == 0.0).then(|| (1.0 / a.sqrt(), 1.0 / c.sqrt()));
        Ok(Self { a, b, c, semi_axes })
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.quadratic_form(x, y) <= 1.0
    }

    pub fn quadratic_form(&self, x: f64, y: f64) -> f64 {
        self.a * x * x + 2.0 * self.b * x * y + self.c * y * y
    }

    /// Rim point in the direction of polar angle `t`.
    pub fn boundary_point(&self, t: f64) -> (f64, f64) {
        let (s, c) = t.sin_cos();
        let r = 1.0 / self.quadratic_form(c, s).sqrt();
        (r * c, r * s)
    }
}

/// Builds the measurement domain for canonical parameters.
///
/// Returns [`Error::DegenerateDomain`] when s₀ s₁ sin φ vanishes: the
/// reachable set is then a segment, handled by [`minimize_delta`].
pub fn ellipse_domain(params: &CanonicalParams) -> Result<EllipseDomain> {
    let (s0, s1, phi) = (params.s0(), params.s1(), params.phi());
    let (sin, cos) = phi.sin_cos();
    let det = s0 * s1 * sin;
    if det.abs() < DEGENERATE_TOL {
        return Err(Error::DegenerateDomain(det));
    }
    if let Some(s) = params.equal_purity() {
        let rx = s * (phi / 2.0).cos().abs();
        let ry = s * (phi / 2.0).sin().abs();
        return Ok(EllipseDomain {
            a: 1.0 / (rx * rx),
            b: 0.0,
            c: 1.0 / (ry * ry),
            semi_axes: Some((rx, ry)),
        });
    }
    let det2 = det * det;
    let diff2 = s0 * s0 + s1 * s1 - 2.0 * s0 * s1 * cos;
    let sum2 = s0 * s0 + s1 * s1 + 2.0 * s0 * s1 * cos;
    Ok(EllipseDomain {
        a: diff2 / det2,
        b: (s1 * s1 - s0 * s0) / det2,
        c: sum2 / det2,
        semi_axes: None,
    })
}

/// Location and value of the minimum of δ̃ over a domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryMinimum {
    pub value: f64,
    pub x: f64,
    pub y: f64,
}

impl BoundaryMinimum {
    /// Picks the representative with y ≥ 0 among the symmetric pair ±(x, y).
    fn upper(value: f64, x: f64, y: f64) -> Self {
        if y < 0.0 || (y == 0.0 && x < 0.0) {
            Self { value, x: -x, y: -y }
        } else {
            Self { value, x, y }
        }
    }
}

/// Minimum of δ̃ over the filled ellipse.
///
/// With B = 0 the minimum is h[(1 + r_y)/2] at (0, r_y). Otherwise the rim is
/// scanned at [`BOUNDARY_SCAN_POINTS`] angles and the best bracket refined by
/// golden-section search.
pub fn minimize_delta_on_ellipse(dom: &EllipseDomain) -> BoundaryMinimum {
    if let Some((_, ry)) = dom.semi_axes {
        return BoundaryMinimum { value: h2((1.0 + ry) / 2.0), x: 0.0, y: ry };
    }

    let objective = |t: f64| {
        let (x, y) = dom.boundary_point(t);
        delta_tilde_unchecked(x, y)
    };
    let step = TAU / BOUNDARY_SCAN_POINTS as f64;
    let (best_i, best_v) = (0..BOUNDARY_SCAN_POINTS)
        .map(|i| (i, objective(i as f64 * step)))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let t0 = best_i as f64 * step;
    let (t_ref, v_ref) = golden_section(objective, t0 - step, t0 + step, BOUNDARY_ANGLE_TOL);
    let t = if v_ref < best_v { t_ref } else { t0 };
    let (x, y) = dom.boundary_point(t);
    BoundaryMinimum::upper(v_ref.min(best_v), x, y)
}

/// Minimum of δ̃ along the segment {t·(a₃, b₃) : |t| ≤ 1}.
pub fn minimize_delta_on_segment(a3: f64, b3: f64) -> BoundaryMinimum {
    let objective = |t: f64| delta_tilde_unchecked(t * a3, t * b3);
    let n = SEGMENT_SCAN_POINTS;
    let step = 2.0 / (n - 1) as f64;
    let (best_i, best_v) = (0..n)
        .map(|i| (i, objective(-1.0 + i as f64 * step)))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let t0 = -1.0 + best_i as f64 * step;
    let lo = (t0 - step).max(-1.0);
    let hi = (t0 + step).min(1.0);
    let (t_ref, v_ref) = golden_section(objective, lo, hi, BOUNDARY_ANGLE_TOL);
    let t = if v_ref < best_v { t_ref } else { t0 };
    BoundaryMinimum::upper(v_ref.min(best_v), t * a3, t * b3)
}

/// Minimum conditional entropy of the canonical state, falling back to the
/// segment search when the ellipse collapses.
pub fn minimize_delta(params: &CanonicalParams) -> BoundaryMinimum {
    match ellipse_domain(params) {
        Ok(dom) => minimize_delta_on_ellipse(&dom),
        Err(_) => {
            let k = params.coefficients();
            minimize_delta_on_segment(k.a3, k.b3)
        }
    }
}
