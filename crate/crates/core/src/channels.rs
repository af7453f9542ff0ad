//! Local memoryless noise: Kraus channels acting on one qubit.
//!
//! Only amplitude damping is shipped, but [`apply_local`] and friends take any
//! [`KrausPair`], so other single-qubit pairs can be plugged in.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::qmat::{tensor, BlochVector, ComplexMatrix, DensityOperator, Subsystem};
use crate::states::CqState;

/// Largest tolerated ‖E₀†E₀ + E₁†E₁ − 𝟙‖_max.
pub const COMPLETENESS_TOL: f64 = 1e-12;

/// Two single-qubit Kraus operators with their damping probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrausPair {
    e0: ComplexMatrix,
    e1: ComplexMatrix,
    p: f64,
}

impl KrausPair {
    /// Checks E₀†E₀ + E₁†E₁ = 𝟙.
    pub fn new(e0: ComplexMatrix, e1: ComplexMatrix, p: f64) -> Result<Self> {
        if e0.dim() != 2 || e1.dim() != 2 {
            return Err(Error::domain("Kraus operators must be 2x2"));
        }
        let pair = Self { e0, e1, p };
        let defect = pair.completeness_defect();
        if defect > COMPLETENESS_TOL {
            return Err(Error::domain(format!("Kraus pair is not trace preserving (defect {defect:e})")));
        }
        Ok(pair)
    }

    pub fn e0(&self) -> &ComplexMatrix {
        &self.e0
    }

    pub fn e1(&self) -> &ComplexMatrix {
        &self.e1
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// ‖E₀†E₀ + E₁†E₁ − 𝟙‖_max
    pub fn completeness_defect(&self) -> f64 {
        let sum = self.e0.adjoint() * self.e0 + self.e1.adjoint() * self.e1;
        sum.max_abs_diff(&ComplexMatrix::identity(2).expect("2x2"))
    }

    /// τ ↦ E₀ τ E₀† + E₁ τ E₁† on a single qubit.
    pub fn apply(&self, tau: &DensityOperator) -> Result<DensityOperator> {
        if tau.dim() != 2 {
            return Err(Error::domain("single-qubit channel applied to a two-qubit state"));
        }
        let m = tau.matrix().conjugate_by(&self.e0) + tau.matrix().conjugate_by(&self.e1);
        DensityOperator::new(m)
    }
}

/// E₀ = |0⟩⟨0| + √(1−p)|1⟩⟨1|, E₁ = √p |0⟩⟨1|.
pub fn amplitude_damping(p: f64) -> Result<KrausPair> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("damping probability must lie in [0, 1], got {p}")));
    }
    let e0 = ComplexMatrix::from_real_diag(&[1.0, (1.0 - p).sqrt()])?;
    let mut e1 = ComplexMatrix::zeros(2)?;
    e1.set(0, 1, p.sqrt().into());
    KrausPair::new(e0, e1, p)
}

/// p = 1 − e^{−γt}
pub fn p_of_t(gamma: f64, t: f64) -> Result<f64> {
    if !(gamma >= 0.0 && t >= 0.0) || !gamma.is_finite() || !t.is_finite() {
        return Err(Error::domain(format!("rate and time must be finite and non-negative, got gamma={gamma}, t={t}")));
    }
    Ok(-(-gamma * t).exp_m1())
}

/// Applies the pair to one qubit of a two-qubit state: (𝟙 ⊗ E_k) for B, (E_k ⊗ 𝟙) for A.
pub fn apply_local(rho: &DensityOperator, kraus: &KrausPair, target: Subsystem) -> Result<DensityOperator> {
    if rho.dim() != 4 {
        return Err(Error::domain("apply_local expects a two-qubit (4x4) state"));
    }
    let id = ComplexMatrix::identity(2)?;
    let lift = |e: &ComplexMatrix| match target {
        Subsystem::A => tensor(e, &id),
        Subsystem::B => tensor(&id, e),
    };
    let (k0, k1) = (lift(&kraus.e0)?, lift(&kraus.e1)?);
    DensityOperator::new(rho.matrix().conjugate_by(&k0) + rho.matrix().conjugate_by(&k1))
}

/// The classical-quantum state after the pair acts on qubit B.
pub fn evolve_cq(cq: &CqState, kraus: &KrausPair) -> Result<CqState> {
    CqState::new(kraus.apply(cq.tau0())?, kraus.apply(cq.tau1())?)
}

/// Where the damped |±⟩⟨±| states sit at damping probability p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub p: f64,
    /// Common Bloch length of the two damped states.
    pub s: f64,
    /// Angle between the two Bloch vectors.
    pub phi: f64,
    pub bloch_plus: BlochVector,
    pub bloch_minus: BlochVector,
}

/// s(p) = √(1 + p(p − 1))
pub fn purity_of_p(p: f64) -> f64 {
    (1.0 + p * (p - 1.0)).sqrt()
}

/// φ(p) = π − 2 arctan(p/√(1 − p)), continuous at p = 1 where it reaches 0.
pub fn angle_of_p(p: f64) -> f64 {
    PI - 2.0 * p.atan2((1.0 - p).sqrt())
}

/// Closed-form trajectory of the damped |+⟩⟨+| and |−⟩⟨−| pair.
pub fn trajectory(p: f64) -> Result<TrajectoryPoint> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("damping probability must lie in [0, 1], got {p}")));
    }
    let x = (1.0 - p).sqrt();
    Ok(TrajectoryPoint {
        p,
        s: purity_of_p(p),
        phi: angle_of_p(p),
        bloch_plus: BlochVector::new(x, 0.0, p)?,
        bloch_minus: BlochVector::new(-x, 0.0, p)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{bloch_to_density, density_to_bloch};
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::LN_2;

    #[test]
    fn kraus_examples() {
        let k = amplitude_damping(0.0).unwrap();
        assert!(k.e0().approx_eq(&ComplexMatrix::identity(2).unwrap()));
        assert!(k.e1().approx_eq(&ComplexMatrix::zeros(2).unwrap()));

        let k = amplitude_damping(1.0).unwrap();
        assert!(k.e0().approx_eq(&ComplexMatrix::from_real_diag(&[1.0, 0.0]).unwrap()));
        let mut decay = ComplexMatrix::zeros(2).unwrap();
        decay.set(0, 1, Complex64::new(1.0, 0.0));
        assert!(k.e1().approx_eq(&decay));

        let k = amplitude_damping(0.5).unwrap();
        assert!(k.e0().approx_eq(&ComplexMatrix::from_real_diag(&[1.0, 0.5f64.sqrt()]).unwrap()));
        assert!(k.completeness_defect() <= 1e-12);

        assert!(amplitude_damping(-0.01).is_err());
        assert!(amplitude_damping(1.5).is_err());
        assert!(amplitude_damping(f64::NAN).is_err());
    }

    #[test]
    fn incomplete_pair_is_rejected() {
        let e0 = ComplexMatrix::identity(2).unwrap();
        let e1 = ComplexMatrix::identity(2).unwrap().scale_real(0.1);
        assert!(KrausPair::new(e0, e1, 0.0).is_err());
    }

    #[test]
    fn damping_schedule() {
        assert_eq!(p_of_t(2.5, 0.0).unwrap(), 0.0);
        assert!((p_of_t(1.0, LN_2).unwrap() - 0.5).abs() < 1e-15);
        let late = p_of_t(1.0, 10.0).unwrap();
        assert!(late > 0.9999 && late < 1.0);
        assert!(p_of_t(-1.0, 1.0).is_err());
        assert!(p_of_t(1.0, -1.0).is_err());
    }

    #[test]
    fn identity_channel_leaves_state_alone() {
        let rho = CqState::b92().assemble();
        let out = apply_local(&rho, &amplitude_damping(0.0).unwrap(), Subsystem::B).unwrap();
        assert!(out.matrix().approx_eq(rho.matrix()));
    }

    #[test]
    fn full_decay_sends_b_to_the_north_pole() {
        let rho = CqState::initial_classical().assemble();
        let out = apply_local(&rho, &amplitude_damping(1.0).unwrap(), Subsystem::B).unwrap();
        let expected = ComplexMatrix::from_real_diag(&[0.5, 0.0, 0.5, 0.0]).unwrap();
        assert!(out.matrix().approx_eq(&expected));
    }

    #[test]
    fn damped_plus_state() {
        let plus = bloch_to_density(&BlochVector::new(1.0, 0.0, 0.0).unwrap()).unwrap();
        let s = density_to_bloch(&amplitude_damping(0.5).unwrap().apply(&plus).unwrap()).unwrap();
        assert!((s.x() - 0.5f64.sqrt()).abs() < 1e-15 && s.y().abs() < 1e-15 && (s.z() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn acting_on_a_is_mirrored() {
        let zero = bloch_to_density(&BlochVector::new(0.0, 0.0, 1.0).unwrap()).unwrap();
        let one = bloch_to_density(&BlochVector::new(0.0, 0.0, -1.0).unwrap()).unwrap();
        let out = apply_local(&one.tensor(&zero).unwrap(), &amplitude_damping(1.0).unwrap(), Subsystem::A).unwrap();
        assert!(out.matrix().approx_eq(zero.tensor(&zero).unwrap().matrix()));
    }

    #[test]
    fn trajectory_examples() {
        let t = trajectory(0.0).unwrap();
        assert_eq!((t.s, t.phi), (1.0, PI));
        let t = trajectory(0.5).unwrap();
        assert!((t.s - 3f64.sqrt() / 2.0).abs() < 1e-15);
        let t = trajectory(1.0).unwrap();
        assert_eq!((t.s, t.phi), (1.0, 0.0));
        assert_eq!(t.bloch_plus.components(), [0.0, 0.0, 1.0]);
        assert!(trajectory(1.01).is_err());
    }

    #[test]
    fn trajectory_angle_matches_bloch_vectors() {
        for i in 0..=200 {
            let t = trajectory(i as f64 / 200.0).unwrap();
            assert!((t.bloch_plus.norm() - t.s).abs() <= 1e-12);
            assert!((t.bloch_minus.norm() - t.s).abs() <= 1e-12);
            let cos = t.bloch_plus.dot(&t.bloch_minus) / (t.s * t.s);
            assert!((cos - t.phi.cos()).abs() <= 1e-12, "p = {}", t.p);
        }
    }

    #[test]
    fn purity_dips_to_its_minimum_at_half() {
        let grid: Vec<(f64, f64)> = (0..=1000).map(|i| i as f64 / 1000.0).map(|p| (p, purity_of_p(p))).collect();
        let (p_min, s_min) = grid.iter().copied().fold((0.0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
        assert_eq!(p_min, 0.5);
        assert!((s_min - 3f64.sqrt() / 2.0).abs() <= 1e-12);
    }

    fn state() -> impl Strategy<Value = DensityOperator> {
        let ball = || {
            (0.0..=1.0f64, -1.0..=1.0f64, 0.0..2.0 * PI).prop_map(|(r, ct, ph)| {
                let st = (1.0 - ct * ct).sqrt();
                bloch_to_density(&BlochVector::new(r * st * ph.cos(), r * st * ph.sin(), r * ct).unwrap()).unwrap()
            })
        };
        (ball(), ball(), ball(), ball(), 0.0..=1.0f64).prop_map(|(a, b, c, d, w)| {
            // Convex mix of two product states (separable but generally correlated).
            let m = a.tensor(&b).unwrap().matrix().scale_real(w) + c.tensor(&d).unwrap().matrix().scale_real(1.0 - w);
            DensityOperator::new(m).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn channel_preserves_trace_and_positivity(rho in state(), p in 0.0..=1.0f64) {
            for target in [Subsystem::A, Subsystem::B] {
                let out = apply_local(&rho, &amplitude_damping(p).unwrap(), target).unwrap();
                prop_assert!((out.matrix().trace().re - 1.0).abs() <= 1e-12);
                prop_assert!(*out.eigenvalues().last().unwrap() >= -1e-10);
            }
        }

        #[test]
        fn damping_composes_markovianly(rho in state(), p1 in 0.0..=1.0f64, p2 in 0.0..=1.0f64) {
            let two_step = apply_local(
                &apply_local(&rho, &amplitude_damping(p1).unwrap(), Subsystem::B).unwrap(),
                &amplitude_damping(p2).unwrap(),
                Subsystem::B,
            ).unwrap();
            let one_step = apply_local(&rho, &amplitude_damping(p1 + p2 - p1 * p2).unwrap(), Subsystem::B).unwrap();
            prop_assert!(two_step.matrix().max_abs_diff(one_step.matrix()) <= 1e-10);
        }
    }
}
