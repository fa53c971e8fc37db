//! Dense complex matrix kernel.
//!
//! Everything downstream (gates, synthesis, symmetry analysis) is built on
//! [`ComplexMatrix`]: a square, row-major matrix of `Complex64` entries.
//! Matrices are immutable values after construction; all operations return
//! fresh matrices, so concurrent read-only use is safe without locking.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Qubit-register layout marker: qubit 1 is the leftmost tensor factor and
/// `|0⟩` is the +1/2 eigenstate of the z projection (`|1⟩` the −1/2 one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SystemShape {
    pub num_qubits: usize,
}

impl SystemShape {
    pub fn new(num_qubits: usize) -> Self {
        assert!(num_qubits >= 1, "system needs at least one qubit");
        Self { num_qubits }
    }

    /// Hilbert-space dimension, `2^num_qubits`.
    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }
}

/// Dense square complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major entries; `entries.len()` must equal `dim²`.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        assert_eq!(entries.len(), dim * dim, "entry count must be dim²");
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(dim, vec![Complex64::new(0.0, 0.0); dim * dim])
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Build from real row-major entries.
    pub fn from_real(dim: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim²");
        Self::new(dim, entries.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub fn diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose `A†`.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.dim, self.entries.iter().map(|&e| e * factor).collect())
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in addition");
        Self::new(
            self.dim,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in subtraction");
        Self::new(
            self.dim,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a - b)
                .collect(),
        )
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in product");
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let aik = self.get(i, k);
                for j in 0..d {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "dimension mismatch in matrix-vector product");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Kronecker product; qubit 1 conventions put `self` on the left factor.
    pub fn tensor(&self, other: &Self) -> Self {
        let d = self.dim * other.dim;
        let mut out = Self::zeros(d);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let aij = self.get(i, j);
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.set(i * other.dim + k, j * other.dim + l, aij * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(self.matmul(other).sub(&other.matmul(self)))
    }

    /// `‖A‖_F = sqrt(Σ |a_ij|²)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn frobenius_distance(&self, other: &Self) -> f64 {
        self.sub(other).frobenius_norm()
    }

    /// Frobenius mass of the off-diagonal part.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    sum += self.get(i, j).norm_sqr();
                }
            }
        }
        sum.sqrt()
    }

    /// Max entry-wise deviation from `A = A†`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..=i {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    /// `‖A†A − I‖_F`.
    pub fn unitarity_deviation(&self) -> f64 {
        self.dagger()
            .matmul(self)
            .frobenius_distance(&Self::identity(self.dim))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    /// Frobenius inner product `⟨A, B⟩ = Tr(A†B)`.
    pub fn frobenius_inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch in inner product");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub(crate) fn check_hermitian(&self, tol: f64) -> Result<()> {
        let deviation = self.hermiticity_deviation();
        if deviation > tol {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(())
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, "  ")?;
                }
                let e = self.get(i, j);
                // +0.0 folds negative zeros away for display
                write!(f, "{:>8.4}{:+8.4}i", e.re + 0.0, e.im + 0.0)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::add(self, rhs)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::sub(self, rhs)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

/// Phase-aware distance report between two unitaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateDistance {
    /// Plain Frobenius distance `‖U − V‖_F`.
    pub frobenius: f64,
    /// `min_φ ‖U − e^{iφ}V‖_F = sqrt(2d − 2|Tr(U†V)|)`.
    pub phase_invariant: f64,
}

/// Distance between unitaries, both plain and minimized over a global phase.
///
/// The minimizing phase is φ* = −arg Tr(u†v), so the phase-invariant value
/// equals `sqrt(2d − 2|Tr(u†v)|)`; it is evaluated as
/// `‖u − e^{iφ*}v‖_F` directly, which stays accurate near zero where the
/// trace formula would lose half the significant digits. Errors if the
/// inputs differ in dimension or fail the unitarity check at `1e-10`.
pub fn phase_distance(u: &ComplexMatrix, v: &ComplexMatrix) -> Result<GateDistance> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    for m in [u, v] {
        let deviation = m.unitarity_deviation();
        if deviation > crate::tolerances::UNITARITY_CHECK {
            return Err(Error::NotUnitary { deviation });
        }
    }
    let overlap = u.dagger().matmul(v).trace();
    let aligned = v.scale(Complex64::from_polar(1.0, -overlap.arg()));
    Ok(GateDistance {
        frobenius: u.frobenius_distance(v),
        phase_invariant: u.frobenius_distance(&aligned),
    })
}
