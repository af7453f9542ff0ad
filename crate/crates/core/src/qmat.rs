//! Dense complex linear algebra for one- and two-qubit operators.
//!
//! Everything here works on 2×2 and 4×4 matrices only. Qubit A is always the
//! left (slow) tensor factor, so the two-qubit basis is ordered
//! |00⟩, |01⟩, |10⟩, |11⟩ with the first label belonging to A.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use nalgebra::{Matrix4, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Entrywise tolerance for matrix equality.
pub const EQ_TOL: f64 = 1e-12;
/// Largest tolerated ‖M − M†‖_max for a density operator.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Largest tolerated |Tr M − 1| for a density operator.
pub const TRACE_TOL: f64 = 1e-10;
/// Most negative tolerated eigenvalue of a density operator.
pub const PSD_TOL: f64 = 1e-10;
/// Slack on the Bloch-ball radius.
pub const BLOCH_TOL: f64 = 1e-10;
/// Slack on the [0, 1] argument range of the binary entropy.
pub const ENTROPY_ARG_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A dense row-major complex matrix of dimension 2 or 4.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [Complex64; 16],
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self { dim, data: [ZERO; 16] })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from `dim * dim` row-major entries.
    pub fn from_row_major(dim: usize, entries: &[Complex64]) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::domain(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        m.data[..dim * dim].copy_from_slice(entries);
        Ok(m)
    }

    pub fn from_real_diag(diag: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * m.dim + i] = Complex64::new(d, 0.0);
        }
        Ok(m)
    }

    /// Outer product |v⟩⟨v| of a 2- or 4-component vector.
    pub fn projector(v: &[Complex64]) -> Result<Self> {
        let mut m = Self::zeros(v.len())?;
        let n = v.len();
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = v[i] * v[j].conj();
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.dim && col < self.dim, "index out of bounds");
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        assert!(row < self.dim && col < self.dim, "index out of bounds");
        self.data[row * self.dim + col] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data[..self.dim * self.dim]
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = *self;
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.data[j * n + i].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = *self;
        out.data.iter_mut().for_each(|z| *z *= factor);
        out
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Entrywise equality within [`EQ_TOL`].
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= EQ_TOL
    }

    /// ‖M − M†‖_max
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// U M U†
    pub fn conjugate_by(&self, unitary: &Self) -> Self {
        *unitary * *self * unitary.adjoint()
    }

    fn to_nalgebra4(self) -> Matrix4<Complex64> {
        Matrix4::from_row_slice(&self.data)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self.get(i, j);
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix { dim: n, data: [ZERO; 16] };
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self;
        out.data.iter_mut().zip(rhs.data).for_each(|(a, b)| *a += b);
        out
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self;
        out.data.iter_mut().zip(rhs.data).for_each(|(a, b)| *a -= b);
        out
    }
}

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 4 => Ok(()),
        _ => Err(Error::domain(format!("matrix dimension must be 2 or 4, got {dim}"))),
    }
}

/// The identity (index 0) and the Pauli matrices σ₁, σ₂, σ₃ (indices 1..=3).
pub fn pauli(index: usize) -> Result<ComplexMatrix> {
    let i = Complex64::i();
    let entries = match index {
        0 => [ONE, ZERO, ZERO, ONE],
        1 => [ZERO, ONE, ONE, ZERO],
        2 => [ZERO, -i, i, ZERO],
        3 => [ONE, ZERO, ZERO, -ONE],
        _ => return Err(Error::domain(format!("Pauli index must be 0..=3, got {index}"))),
    };
    ComplexMatrix::from_row_major(2, &entries)
}

/// Kronecker product with `a` as the slow (left) factor.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim != 2 || b.dim != 2 {
        return Err(Error::domain("tensor expects two 2x2 factors"));
    }
    let mut out = ComplexMatrix::zeros(4)?;
    for ar in 0..2 {
        for ac in 0..2 {
            let x = a.get(ar, ac);
            for br in 0..2 {
                for bc in 0..2 {
                    out.set(2 * ar + br, 2 * ac + bc, x * b.get(br, bc));
                }
            }
        }
    }
    Ok(out)
}

/// Which qubit of a two-qubit system an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

impl Subsystem {
    pub fn other(self) -> Self {
        match self {
            Subsystem::A => Subsystem::B,
            Subsystem::B => Subsystem::A,
        }
    }
}

impl FromStr for Subsystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Subsystem::A),
            "B" | "b" => Ok(Subsystem::B),
            other => Err(Error::domain(format!("subsystem label must be A or B, got {other:?}"))),
        }
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subsystem::A => "A",
            Subsystem::B => "B",
        })
    }
}

/// A validated density operator: Hermitian, unit trace and positive semidefinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
}

impl DensityOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let herm = matrix.hermiticity_defect();
        if herm > HERMITIAN_TOL {
            return Err(Error::invalid(format!(
                "not Hermitian (max |M - M^dagger| = {herm:e} > {HERMITIAN_TOL:e})"
            )));
        }
        let tr = matrix.trace();
        if (tr - ONE).norm() > TRACE_TOL {
            return Err(Error::invalid(format!(
                "trace is {}{:+}i, not 1 (tolerance {TRACE_TOL:e})",
                tr.re, tr.im
            )));
        }
        let min_eig = *eigvals_unchecked(&matrix).last().expect("non-empty spectrum");
        if min_eig < -PSD_TOL {
            return Err(Error::invalid(format!(
                "not positive semidefinite (min eigenvalue {min_eig:e} < -{PSD_TOL:e})"
            )));
        }
        Ok(Self { matrix })
    }

    /// Skips validation; callers guarantee the invariants by construction.
    pub(crate) fn new_unchecked(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        let m = ComplexMatrix::identity(dim)?.scale_real(1.0 / dim as f64);
        Ok(Self::new_unchecked(m))
    }

    /// |ψ⟩⟨ψ| for a normalized 2- or 4-component vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > TRACE_TOL {
            return Err(Error::invalid(format!("state vector has norm {norm}, not 1")));
        }
        Self::new(ComplexMatrix::projector(psi)?)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Spectrum in descending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        eigvals_unchecked(&self.matrix)
    }

    pub fn tensor(&self, other: &DensityOperator) -> Result<DensityOperator> {
        Ok(Self::new_unchecked(tensor(&self.matrix, &other.matrix)?))
    }
}

/// Bloch vector **s** of a qubit state τ = (𝟙 + **s**·**σ**)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    x: f64,
    y: f64,
    z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Self { x, y, z };
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::invalid("Bloch vector has non-finite components"));
        }
        let len = v.norm();
        if len > 1.0 + BLOCH_TOL {
            return Err(Error::invalid(format!("Bloch vector length {len} exceeds 1")));
        }
        Ok(v)
    }

    pub fn origin() -> Self {
        Self { x: 0.0, y: 0.0, z: 0.0 }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Angle in [0, π] between two vectors; 0 when either has zero length.
    pub fn angle_to(&self, other: &BlochVector) -> f64 {
        let denom = self.norm() * other.norm();
        if denom == 0.0 {
            return 0.0;
        }
        (self.dot(other) / denom).clamp(-1.0, 1.0).acos()
    }
}

pub fn bloch_to_density(s: &BlochVector) -> Result<DensityOperator> {
    let s = BlochVector::new(s.x, s.y, s.z)?;
    let half = 0.5;
    let m = ComplexMatrix::from_row_major(
        2,
        &[
            Complex64::new(half * (1.0 + s.z), 0.0),
            Complex64::new(half * s.x, -half * s.y),
            Complex64::new(half * s.x, half * s.y),
            Complex64::new(half * (1.0 - s.z), 0.0),
        ],
    )?;
    Ok(DensityOperator::new_unchecked(m))
}

/// s_i = Tr(τ σ_i)
pub fn density_to_bloch(tau: &DensityOperator) -> Result<BlochVector> {
    if tau.dim() != 2 {
        return Err(Error::domain("density_to_bloch expects a single-qubit (2x2) state"));
    }
    let m = tau.matrix();
    let off = m.get(1, 0);
    Ok(BlochVector {
        x: 2.0 * off.re,
        y: 2.0 * off.im,
        z: (m.get(0, 0) - m.get(1, 1)).re,
    })
}

/// Reduced state of the `keep` qubit.
pub fn partial_trace(rho: &DensityOperator, keep: Subsystem) -> Result<DensityOperator> {
    if rho.dim() != 4 {
        return Err(Error::domain("partial_trace expects a two-qubit (4x4) state"));
    }
    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(2)?;
    for i in 0..2 {
        for j in 0..2 {
            let v = match keep {
                Subsystem::A => m.get(2 * i, 2 * j) + m.get(2 * i + 1, 2 * j + 1),
                Subsystem::B => m.get(i, j) + m.get(2 + i, 2 + j),
            };
            out.set(i, j, v);
        }
    }
    Ok(DensityOperator::new_unchecked(out))
}

/// Real eigenvalues of a Hermitian matrix, descending.
pub fn eigvals_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::domain(format!("matrix is not Hermitian (defect {defect:e})")));
    }
    Ok(eigvals_unchecked(m))
}

fn eigvals_unchecked(m: &ComplexMatrix) -> Vec<f64> {
    let mut vals = match m.dim() {
        2 => {
            let [l0, l1] = eigvals_2x2(m.get(0, 0).re, m.get(1, 1).re, m.get(0, 1));
            vec![l0, l1]
        }
        _ => SymmetricEigen::new(m.to_nalgebra4()).eigenvalues.iter().copied().collect(),
    };
    vals.sort_by(|a, b| b.total_cmp(a));
    vals
}

/// Closed-form spectrum of [[a, b], [b*, d]], descending.
#[inline]
pub(crate) fn eigvals_2x2(a: f64, d: f64, b: Complex64) -> [f64; 2] {
    let mean = 0.5 * (a + d);
    let half_diff = 0.5 * (a - d);
    let r = half_diff.hypot(b.norm());
    [mean + r, mean - r]
}

/// Binary Shannon entropy in bits.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-ENTROPY_ARG_TOL..=1.0 + ENTROPY_ARG_TOL).contains(&x) {
        return Err(Error::domain(format!("binary entropy argument {x} outside [0, 1]")));
    }
    Ok(h2(x))
}

/// Binary entropy with the argument clamped into [0, 1].
#[inline]
pub(crate) fn h2(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    xlog2x_neg(x) + xlog2x_neg(1.0 - x)
}

/// −x log₂ x with 0·log 0 = 0.
#[inline]
pub(crate) fn xlog2x_neg(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Entropy of a list of eigenvalues; entries in [−PSD_TOL, 0) count as 0.
pub(crate) fn spectrum_entropy(eigs: &[f64]) -> f64 {
    eigs.iter().map(|&l| xlog2x_neg(l.max(0.0))).sum::<f64>().max(0.0)
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityOperator) -> f64 {
    spectrum_entropy(&rho.eigenvalues())
}
