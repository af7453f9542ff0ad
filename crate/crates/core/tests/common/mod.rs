#![allow(dead_code)]

use std::f64::consts::PI;

use cq_discord::correlations::delta_tilde;
use cq_discord::qmat::{BlochVector, ComplexMatrix};
use cq_discord::states::{CanonicalParams, CqState};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn unit_vector(rng: &mut impl Rng) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let a: f64 = rng.gen_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * a.cos(), r * a.sin(), z]
}

pub fn bloch(rng: &mut impl Rng, len: f64) -> BlochVector {
    let [x, y, z] = unit_vector(rng).map(|c| c * len);
    BlochVector::new(x, y, z).unwrap()
}

pub fn random_cq(rng: &mut impl Rng) -> CqState {
    let (l0, l1) = (rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0));
    CqState::from_bloch(&bloch(rng, l0), &bloch(rng, l1)).unwrap()
}

pub fn random_equal_purity_cq(rng: &mut impl Rng) -> CqState {
    let s = rng.gen_range(0.0..=1.0);
    CqState::from_bloch(&bloch(rng, s), &bloch(rng, s)).unwrap()
}

/// Haar-ish 2×2 unitary from ZYZ Euler angles and a global phase.
pub fn random_unitary(rng: &mut impl Rng) -> ComplexMatrix {
    let (a, b, c, g): (f64, f64, f64, f64) = (
        rng.gen_range(0.0..2.0 * PI),
        rng.gen_range(0.0..PI),
        rng.gen_range(0.0..2.0 * PI),
        rng.gen_range(0.0..2.0 * PI),
    );
    let e = |t: f64| Complex64::from_polar(1.0, t);
    let (cb, sb) = ((b / 2.0).cos(), (b / 2.0).sin());
    ComplexMatrix::from_row_major(
        2,
        &[
            e(g - (a + c) / 2.0) * cb,
            -e(g - (a - c) / 2.0) * sb,
            e(g + (a - c) / 2.0) * sb,
            e(g + (a + c) / 2.0) * cb,
        ],
    )
    .unwrap()
}

/// Brute-force minimum of δ̃ over every (x, y) reachable by a projective
/// measurement on B: (x, y) = M·(n₁, n₃) with (n₁, n₃) on a polar mesh of the
/// closed unit disk, M the Pauli coefficient matrix [[a₁, a₃], [b₁, b₃]].
pub fn brute_force_min(params: &CanonicalParams, radii: usize, angles: usize) -> (f64, f64, f64) {
    let k = params.coefficients();
    (1..=radii)
        .into_par_iter()
        .flat_map_iter(|i| {
            let r = i as f64 / radii as f64;
            (0..angles).map(move |j| {
                let (s, c) = (2.0 * PI * j as f64 / angles as f64).sin_cos();
                let (n1, n3) = (r * c, r * s);
                let (x, y) = (k.a1 * n1 + k.a3 * n3, k.b1 * n1 + k.b3 * n3);
                (delta_tilde(x, y).unwrap(), x, y)
            })
        })
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .unwrap()
}
