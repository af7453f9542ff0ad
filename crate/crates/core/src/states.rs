//! Classical-quantum states ½(|0⟩⟨0| ⊗ τ₀ + |1⟩⟨1| ⊗ τ₁) and their canonical frame.
//!
//! Discord measured on B depends on (τ₀, τ₁) only through the two Bloch
//! lengths and the angle between the Bloch vectors, so every state of the
//! family reduces to a [`CanonicalParams`] triple. In that frame **s**₀ points
//! along Z and **s**₁ lies in the X–Z plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmat::{
    bloch_to_density, density_to_bloch, pauli, tensor, BlochVector, ComplexMatrix, DensityOperator,
    HERMITIAN_TOL, TRACE_TOL,
};

/// Purities closer than this are treated as equal.
pub const EQUAL_PURITY_TOL: f64 = 1e-10;

/// A classical-quantum state, stored as its two conditional states of B.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CqState {
    tau0: DensityOperator,
    tau1: DensityOperator,
}

impl CqState {
    pub fn new(tau0: DensityOperator, tau1: DensityOperator) -> Result<Self> {
        if tau0.dim() != 2 || tau1.dim() != 2 {
            return Err(Error::domain("tau0 and tau1 must be single-qubit states"));
        }
        Ok(Self { tau0, tau1 })
    }

    pub fn from_bloch(s0: &BlochVector, s1: &BlochVector) -> Result<Self> {
        Self::new(bloch_to_density(s0)?, bloch_to_density(s1)?)
    }

    /// τ₀ = |+⟩⟨+|, τ₁ = |−⟩⟨−|: fully classical, yet correlated.
    pub fn initial_classical() -> Self {
        Self::from_bloch(&unit(1.0, 0.0, 0.0), &unit(-1.0, 0.0, 0.0)).expect("unit Bloch vectors")
    }

    /// τ₀ = |0⟩⟨0|, τ₁ = |+⟩⟨+|: the B92 resource state.
    pub fn b92() -> Self {
        Self::from_bloch(&unit(0.0, 0.0, 1.0), &unit(1.0, 0.0, 0.0)).expect("unit Bloch vectors")
    }

    /// Recovers (τ₀, τ₁) from a two-qubit state that is block-diagonal in the
    /// computational basis of A with equal weights ½.
    pub fn from_density(rho: &DensityOperator) -> Result<Self> {
        if rho.dim() != 4 {
            return Err(Error::domain("a classical-quantum state is a two-qubit (4x4) state"));
        }
        let m = rho.matrix();
        let coherence = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, 2 + j).norm())
            .fold(0.0, f64::max);
        if coherence > HERMITIAN_TOL {
            return Err(Error::invalid(format!(
                "not classical on A: off-diagonal block has magnitude {coherence:e}"
            )));
        }
        let block = |offset: usize| -> Result<DensityOperator> {
            let entries: Vec<Complex64> = (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| 2.0 * m.get(offset + i, offset + j))
                .collect();
            DensityOperator::new(ComplexMatrix::from_row_major(2, &entries)?)
        };
        let weight0 = m.get(0, 0).re + m.get(1, 1).re;
        if (weight0 - 0.5).abs() > TRACE_TOL {
            return Err(Error::invalid(format!(
                "classical weights must both be 1/2, got {weight0} and {}",
                1.0 - weight0
            )));
        }
        Self::new(block(0)?, block(2)?)
    }

    pub fn tau0(&self) -> &DensityOperator {
        &self.tau0
    }

    pub fn tau1(&self) -> &DensityOperator {
        &self.tau1
    }

    pub fn bloch0(&self) -> BlochVector {
        density_to_bloch(&self.tau0).expect("tau0 is 2x2")
    }

    pub fn bloch1(&self) -> BlochVector {
        density_to_bloch(&self.tau1).expect("tau1 is 2x2")
    }

    /// ½(|0⟩⟨0| ⊗ τ₀ + |1⟩⟨1| ⊗ τ₁)
    pub fn assemble(&self) -> DensityOperator {
        let p0 = ComplexMatrix::from_real_diag(&[1.0, 0.0]).expect("2x2");
        let p1 = ComplexMatrix::from_real_diag(&[0.0, 1.0]).expect("2x2");
        let m = tensor(&p0, self.tau0.matrix()).expect("2x2 factors")
            + tensor(&p1, self.tau1.matrix()).expect("2x2 factors");
        DensityOperator::new_unchecked(m.scale_real(0.5))
    }

    /// Bloch lengths and the angle between the two Bloch vectors.
    pub fn canonicalize(&self) -> CanonicalParams {
        let (b0, b1) = (self.bloch0(), self.bloch1());
        CanonicalParams {
            s0: b0.norm().min(1.0),
            s1: b1.norm().min(1.0),
            phi: b0.angle_to(&b1),
        }
    }

    /// Applies the same qubit-B operation X ↦ U X U† to both conditional states.
    pub fn rotate_b(&self, unitary: &ComplexMatrix) -> Result<Self> {
        Self::new(
            DensityOperator::new(self.tau0.matrix().conjugate_by(unitary))?,
            DensityOperator::new(self.tau1.matrix().conjugate_by(unitary))?,
        )
    }
}

fn unit(x: f64, y: f64, z: f64) -> BlochVector {
    BlochVector::new(x, y, z).expect("valid Bloch vector")
}

/// (s₀, s₁, φ): Bloch lengths and the angle between **s**₀ and **s**₁.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalParams {
    s0: f64,
    s1: f64,
    phi: f64,
}

impl CanonicalParams {
    pub fn new(s0: f64, s1: f64, phi: f64) -> Result<Self> {
        let in_unit = |v: f64| (0.0..=1.0).contains(&v);
        if !in_unit(s0) || !in_unit(s1) {
            return Err(Error::domain(format!("Bloch lengths must lie in [0, 1], got s0={s0}, s1={s1}")));
        }
        if !(0.0..=PI).contains(&phi) {
            return Err(Error::domain(format!("angle phi must lie in [0, pi], got {phi}")));
        }
        // A zero-length vector has no direction.
        let phi = if s0 == 0.0 || s1 == 0.0 { 0.0 } else { phi };
        Ok(Self { s0, s1, phi })
    }

    /// Equal-purity parameters (s, s, φ).
    pub fn equal(s: f64, phi: f64) -> Result<Self> {
        Self::new(s, s, phi)
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    pub fn s1(&self) -> f64 {
        self.s1
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The common Bloch length when |s₀ − s₁| ≤ [`EQUAL_PURITY_TOL`].
    pub fn equal_purity(&self) -> Option<f64> {
        ((self.s0 - self.s1).abs() <= EQUAL_PURITY_TOL).then_some({
            if self.s0 == self.s1 {
                self.s0
            } else {
                0.5 * (self.s0 + self.s1)
            }
        })
    }

    /// Pauli weights a₁, a₃, b₁, b₃ of the canonical-frame state.
    pub fn coefficients(&self) -> CqCoefficients {
        let (sin, cos) = self.phi.sin_cos();
        let a1 = 0.5 * self.s1 * sin;
        CqCoefficients {
            a1,
            a3: 0.5 * (self.s0 + self.s1 * cos),
            b1: -a1,
            b3: 0.5 * (self.s0 - self.s1 * cos),
        }
    }

    /// The representative state with **s**₀ on Z and **s**₁ in the X–Z plane.
    pub fn canonical_state(&self) -> CqState {
        let (sin, cos) = self.phi.sin_cos();
        let s0 = BlochVector::new(0.0, 0.0, self.s0).expect("s0 <= 1");
        let s1 = BlochVector::new(self.s1 * sin, 0.0, self.s1 * cos).expect("s1 <= 1");
        CqState::from_bloch(&s0, &s1).expect("valid Bloch vectors")
    }
}

/// Weights in ρ = ¼[𝟙⊗𝟙 + 𝟙⊗(a₁σ₁ + a₃σ₃) + σ₃⊗(b₁σ₁ + b₃σ₃)].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CqCoefficients {
    pub a1: f64,
    pub a3: f64,
    pub b1: f64,
    pub b3: f64,
}

impl CqCoefficients {
    /// The 4×4 matrix built from the Pauli expansion.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let p = |i| pauli(i).expect("index in range");
        let id = p(0);
        let local_b = p(1).scale_real(self.a1) + p(3).scale_real(self.a3);
        let corr_b = p(1).scale_real(self.b1) + p(3).scale_real(self.b3);
        let m = tensor(&id, &id).expect("2x2")
            + tensor(&id, &local_b).expect("2x2")
            + tensor(&p(3), &corr_b).expect("2x2");
        m.scale_real(0.25)
    }
}
