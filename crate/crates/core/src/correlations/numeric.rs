//! Discord by direct search over projective measurements.

use std::f64::consts::{FRAC_PI_2, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::optimize::{nelder_mead_2d, Bounds};
use crate::qmat::{partial_trace, von_neumann_entropy, DensityOperator, Subsystem};

use super::measurement::{conditional_entropy, MeasurementBasis};
use super::CorrelationReport;

/// Simplex stops once its objective spread falls below this (bits).
pub const REFINE_FTOL: f64 = 1e-9;
pub const REFINE_MAX_ITER: usize = 200;

/// Mesh and refinement settings for [`discord_numeric`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeshOptions {
    /// Points in ϑ over [0, π/2).
    pub n_theta: usize,
    /// Points in φ_m over [0, 2π).
    pub n_phi: usize,
    pub refine: bool,
}

impl Default for MeshOptions {
    fn default() -> Self {
        Self { n_theta: 64, n_phi: 128, refine: true }
    }
}

impl MeshOptions {
    pub fn new(n_theta: usize, n_phi: usize, refine: bool) -> Result<Self> {
        let opts = Self { n_theta, n_phi, refine };
        opts.validate()?;
        Ok(opts)
    }

    fn validate(&self) -> Result<()> {
        if self.n_theta < 8 || self.n_phi < 16 {
            return Err(Error::domain(format!(
                "mesh too coarse: need n_theta >= 8 and n_phi >= 16, got {} x {}",
                self.n_theta, self.n_phi
            )));
        }
        Ok(())
    }

    fn theta_step(&self) -> f64 {
        FRAC_PI_2 / self.n_theta as f64
    }

    fn phi_step(&self) -> f64 {
        TAU / self.n_phi as f64
    }
}

/// Minimum of Σ_k p_k S(ρ_k) over measurements on `measured`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementMinimum {
    pub value: f64,
    pub basis: MeasurementBasis,
}

/// Scans the (ϑ, φ_m) mesh and optionally polishes the best point with a
/// simplex. Mesh points are evaluated in parallel; ties go to the
/// lowest ϑ, then the lowest φ_m.
pub fn minimize_conditional_entropy(
    rho: &DensityOperator,
    measured: Subsystem,
    opts: &MeshOptions,
) -> Result<MeasurementMinimum> {
    if rho.dim() != 4 {
        return Err(Error::domain("discord needs a two-qubit (4x4) state"));
    }
    opts.validate()?;
    let m = rho.matrix();
    let (dt, dp) = (opts.theta_step(), opts.phi_step());
    let objective = |theta: f64, phi: f64| match MeasurementBasis::wrapped(theta, phi) {
        Ok(basis) => conditional_entropy(m, &basis, measured),
        Err(_) => f64::INFINITY,
    };

    let values: Vec<f64> = (0..opts.n_theta * opts.n_phi)
        .into_par_iter()
        .map(|idx| objective((idx / opts.n_phi) as f64 * dt, (idx % opts.n_phi) as f64 * dp))
        .collect();
    let (best_idx, best_value) = values
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let mut best = MeasurementMinimum {
        value: best_value,
        basis: MeasurementBasis::new((best_idx / opts.n_phi) as f64 * dt, (best_idx % opts.n_phi) as f64 * dp)?,
    };

    if opts.refine {
        // The objective is smooth on the whole (ϑ, φ_m) plane, so the simplex
        // may cross the poles freely.
        let bounds = Bounds { lo: [f64::NEG_INFINITY; 2], hi: [f64::INFINITY; 2] };
        let start = [best.basis.theta(), best.basis.phi_m()];
        let r = nelder_mead_2d(|p| objective(p[0], p[1]), start, [dt, dp], bounds, REFINE_FTOL, REFINE_MAX_ITER);
        if r.value < best.value {
            best = MeasurementMinimum {
                value: r.value,
                basis: MeasurementBasis::wrapped(r.point[0], r.point[1])?,
            };
        }
    }
    Ok(best)
}

/// Discord with measurements on `measured`, with classical correlations and
/// mutual information.
///
/// D = S(ρ_m) − S(ρ) + min Σ_k p_k S(ρ_k), where ρ_m is the measured qubit's
/// marginal. C = I − D.
pub fn discord_numeric(rho: &DensityOperator, measured: Subsystem, opts: &MeshOptions) -> Result<CorrelationReport> {
    let min = minimize_conditional_entropy(rho, measured, opts)?;
    let s_joint = von_neumann_entropy(rho);
    let s_measured = von_neumann_entropy(&partial_trace(rho, measured)?);
    let s_other = von_neumann_entropy(&partial_trace(rho, measured.other())?);
    let mutual = (s_measured + s_other - s_joint).max(0.0);
    let discord = (s_measured - s_joint + min.value).max(0.0);
    Ok(CorrelationReport {
        discord,
        classical: mutual - discord,
        mutual,
        argmin_basis: Some(min.basis),
    })
}
