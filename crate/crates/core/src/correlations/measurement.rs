//! Rank-one projective measurements on one qubit of a two-qubit state.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmat::{eigvals_2x2, spectrum_entropy, ComplexMatrix, DensityOperator, Subsystem};

/// Outcomes less likely than this contribute nothing to the conditional entropy.
pub const OUTCOME_PROB_FLOOR: f64 = 1e-14;

/// The basis {|Ψ₀⟩, |Ψ₁⟩} with |Ψ₀⟩ = cos ϑ|0⟩ + e^{iφ} sin ϑ|1⟩ and
/// |Ψ₁⟩ = e^{−iφ} sin ϑ|0⟩ − cos ϑ|1⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis {
    theta: f64,
    phi_m: f64,
}

impl MeasurementBasis {
    pub fn new(theta: f64, phi_m: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(Error::domain(format!("theta must lie in [0, pi/2], got {theta}")));
        }
        if !(0.0..=TAU).contains(&phi_m) {
            return Err(Error::domain(format!("phi_m must lie in [0, 2pi], got {phi_m}")));
        }
        Ok(Self { theta, phi_m })
    }

    /// The basis for any real (ϑ, φ_m), folded into ϑ ∈ [0, π/2], φ_m ∈ [0, 2π).
    ///
    /// |Ψ₀⟩ is π-periodic in ϑ up to sign, and ϑ → π − ϑ equals φ_m → φ_m + π.
    pub fn wrapped(theta: f64, phi_m: f64) -> Result<Self> {
        if !theta.is_finite() || !phi_m.is_finite() {
            return Err(Error::domain("measurement angles must be finite"));
        }
        let mut t = theta.rem_euclid(PI);
        let mut p = phi_m;
        if t > FRAC_PI_2 {
            t = PI - t;
            p += PI;
        }
        let p = p.rem_euclid(TAU);
        Self::new(t.min(FRAC_PI_2), if p >= TAU { 0.0 } else { p })
    }

    /// The computational basis.
    pub fn computational() -> Self {
        Self { theta: 0.0, phi_m: 0.0 }
    }

    /// The basis whose first projector has Bloch direction `n` (normalized here).
    pub fn from_direction(n: [f64; 3]) -> Result<Self> {
        let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::domain("measurement direction must be a non-zero finite vector"));
        }
        let theta = 0.5 * (n[2] / len).clamp(-1.0, 1.0).acos();
        let phi_m = n[1].atan2(n[0]).rem_euclid(TAU);
        Self::new(theta.min(FRAC_PI_2), phi_m.min(TAU))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi_m(&self) -> f64 {
        self.phi_m
    }

    /// (|Ψ₀⟩, |Ψ₁⟩)
    pub fn vectors(&self) -> [[Complex64; 2]; 2] {
        let (s, c) = self.theta.sin_cos();
        let phase = Complex64::from_polar(1.0, self.phi_m);
        [
            [Complex64::new(c, 0.0), phase * s],
            [phase.conj() * s, Complex64::new(-c, 0.0)],
        ]
    }

    pub fn projectors(&self) -> [ComplexMatrix; 2] {
        self.vectors().map(|v| ComplexMatrix::projector(&v).expect("2-component vector"))
    }

    /// Bloch direction of the first projector.
    pub fn direction(&self) -> [f64; 3] {
        let (s2, c2) = (2.0 * self.theta).sin_cos();
        let (sp, cp) = self.phi_m.sin_cos();
        [s2 * cp, s2 * sp, c2]
    }
}

/// Σ_k p_k S(ρ_k) after measuring `measured` in `basis`, in bits.
pub fn conditional_entropy_after_measurement(
    rho: &DensityOperator,
    basis: &MeasurementBasis,
    measured: Subsystem,
) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::domain("measurement acts on a two-qubit (4x4) state"));
    }
    Ok(conditional_entropy(rho.matrix(), basis, measured))
}

/// Works on the conditional state of the unmeasured qubit: the post-measurement
/// state is that state tensored with a pure projector, so the entropies agree.
pub(crate) fn conditional_entropy(rho: &ComplexMatrix, basis: &MeasurementBasis, measured: Subsystem) -> f64 {
    let index = |keep: usize, meas: usize| match measured {
        Subsystem::B => 2 * keep + meas,
        Subsystem::A => 2 * meas + keep,
    };
    basis
        .vectors()
        .iter()
        .map(|psi| {
            // ⟨ψ| ρ |ψ⟩ over the measured qubit, as a 2×2 block on the other.
            let block = |i: usize, j: usize| -> Complex64 {
                let mut acc = Complex64::new(0.0, 0.0);
                for (a, pa) in psi.iter().enumerate() {
                    for (b, pb) in psi.iter().enumerate() {
                        acc += pa.conj() * rho.get(index(i, a), index(j, b)) * pb;
                    }
                }
                acc
            };
            let (m00, m11, m01) = (block(0, 0).re, block(1, 1).re, block(0, 1));
            let p = m00 + m11;
            if p < OUTCOME_PROB_FLOOR {
                return 0.0;
            }
            let eigs = eigvals_2x2(m00 / p, m11 / p, m01 / p);
            p * spectrum_entropy(&eigs)
        })
        .sum()
}
