//! Quantum discord, classical correlations and mutual information.
//!
//! Two independent routes are provided. The closed forms cover
//! classical-quantum states whose conditional states share a Bloch length;
//! [`discord_numeric`] handles any two-qubit state by searching over
//! projective measurements.

mod ellipse;
mod measurement;
mod numeric;
mod surface;

pub use ellipse::{
    ellipse_domain, minimize_delta, minimize_delta_on_ellipse, minimize_delta_on_segment, BoundaryMinimum,
    EllipseDomain, BOUNDARY_ANGLE_TOL, BOUNDARY_SCAN_POINTS, DEGENERATE_TOL, SEGMENT_SCAN_POINTS,
};
pub use measurement::{conditional_entropy_after_measurement, MeasurementBasis, OUTCOME_PROB_FLOOR};
pub use numeric::{
    discord_numeric, minimize_conditional_entropy, MeasurementMinimum, MeshOptions, REFINE_FTOL, REFINE_MAX_ITER,
};
pub use surface::{delta_tilde, SQUARE_TOL};

use crate::error::{Error, Result};
use crate::qmat::{h2, partial_trace, von_neumann_entropy, DensityOperator, Subsystem};
use crate::states::{CanonicalParams, EQUAL_PURITY_TOL};

/// Correlation content of a two-qubit state, in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub discord: f64,
    pub classical: f64,
    pub mutual: f64,
    /// Optimal measurement, when found by search.
    pub argmin_basis: Option<MeasurementBasis>,
}

impl CorrelationReport {
    /// Closed-form report for an equal-purity classical-quantum state.
    pub fn analytic(params: &CanonicalParams) -> Result<Self> {
        let discord = discord_analytic(params)?;
        let classical = classical_analytic(params)?;
        Ok(Self { discord, classical, mutual: discord + classical, argmin_basis: None })
    }
}

fn equal_purity(params: &CanonicalParams) -> Result<f64> {
    params.equal_purity().ok_or_else(|| {
        Error::UnsupportedRegime(format!(
            "closed form needs |s0 - s1| <= {EQUAL_PURITY_TOL:e}, got s0={}, s1={}; use discord_numeric",
            params.s0(),
            params.s1()
        ))
    })
}

/// D = h[(1 + s|cos φ/2|)/2] + h[(1 + s|sin φ/2|)/2] − h[(1 + s)/2] − 1
pub fn discord_analytic(params: &CanonicalParams) -> Result<f64> {
    let s = equal_purity(params)?;
    let half = params.phi() / 2.0;
    let d = h2((1.0 + s * half.cos().abs()) / 2.0) + h2((1.0 + s * half.sin().abs()) / 2.0)
        - h2((1.0 + s) / 2.0)
        - 1.0;
    Ok(d.max(0.0))
}

/// C = 1 − h[(1 + s|sin φ/2|)/2]
pub fn classical_analytic(params: &CanonicalParams) -> Result<f64> {
    let s = equal_purity(params)?;
    Ok((1.0 - h2((1.0 + s * (params.phi() / 2.0).sin().abs()) / 2.0)).max(0.0))
}

/// I = S(ρ_A) + S(ρ_B) − S(ρ), clamped at zero.
pub fn mutual_information(rho: &DensityOperator) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::domain("mutual information needs a two-qubit (4x4) state"));
    }
    let s_a = von_neumann_entropy(&partial_trace(rho, Subsystem::A)?);
    let s_b = von_neumann_entropy(&partial_trace(rho, Subsystem::B)?);
    Ok((s_a + s_b - von_neumann_entropy(rho)).max(0.0))
}
