//! Hermitian eigendecomposition and the exponential map.
//!
//! The solver is a cyclic Jacobi iteration on the full complex Hermitian
//! matrix: each rotation annihilates one off-diagonal pair with a unitary
//! 2×2 similarity, sweeping until the off-diagonal Frobenius mass drops
//! below [`tolerances::JACOBI_OFF_DIAGONAL`]`·‖H‖_F` (capped at
//! [`tolerances::JACOBI_MAX_SWEEPS`] sweeps). Dimensions in this crate stay
//! at or below 64, where Jacobi is both robust and plenty fast.

use num_complex::Complex64;

use crate::error::Result;
use crate::matrix::ComplexMatrix;
use crate::tolerances;

/// Eigenvalues (ascending) and orthonormal eigenvector columns of a
/// Hermitian matrix.
///
/// Contract: `‖V·diag(λ)·V† − H‖_F ≤ 1e-12·max(1, ‖H‖_F)` and
/// `‖V†V − I‖_F ≤ 1e-12`. No canonical eigenvector choice is promised for
/// degenerate eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl SpectralDecomposition {
    /// Rebuild `V·diag(λ)·V†`; used by reconstruction checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.eigenvalues.len();
        let diag = ComplexMatrix::diagonal(
            &self
                .eigenvalues
                .iter()
                .map(|&l| Complex64::new(l, 0.0))
                .collect::<Vec<_>>(),
        );
        let v = &self.eigenvectors;
        debug_assert_eq!(v.dim(), d);
        v.matmul(&diag).matmul(&v.dagger())
    }
}

/// Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.
///
/// Errors when the input deviates from Hermiticity by more than `1e-10`.
/// Output is deterministic for identical input: fixed sweep order, stable
/// ascending sort.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<SpectralDecomposition> {
    h.check_hermitian(tolerances::HERMITICITY_CHECK)?;
    let d = h.dim();

    // Symmetrize away any sub-tolerance dust so the iteration sees an
    // exactly Hermitian matrix.
    let mut a = h.add(&h.dagger()).scale_re(0.5);
    let mut v = ComplexMatrix::identity(d);

    let h_norm = a.frobenius_norm();
    let off_target = tolerances::JACOBI_OFF_DIAGONAL * h_norm;

    if h_norm > 0.0 {
        for _sweep in 0..tolerances::JACOBI_MAX_SWEEPS {
            if a.off_diagonal_norm() <= off_target {
                break;
            }
            for p in 0..d {
                for q in (p + 1)..d {
                    jacobi_rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }

    // Diagonal entries are the eigenvalues; sort ascending, carrying the
    // eigenvector columns along. Ties keep their sweep order.
    let mut order: Vec<usize> = (0..d).collect();
    let diag: Vec<f64> = (0..d).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap().then(i.cmp(&j)));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(d);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..d {
            eigenvectors.set(row, new_col, v.get(row, old_col));
        }
    }

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// One Jacobi step: annihilate `a[p][q]` with the unitary
/// `U = [[c, −s·e^{iφ}], [s·e^{−iφ}, c]]` where `φ = arg(a[p][q])`,
/// applied as `A ← U†AU`, `V ← V·U`.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let pivot = a.get(p, q);
    let r = pivot.norm();
    if r == 0.0 {
        return;
    }
    let phase = pivot / Complex64::new(r, 0.0); // e^{iφ}

    let alpha = a.get(p, p).re;
    let beta = a.get(q, q).re;
    let tau = (alpha - beta) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let d = a.dim();
    let cs = Complex64::new(c, 0.0);
    let s_phase = phase.scale(s); // s·e^{iφ}
    let s_phase_conj = s_phase.conj(); // s·e^{−iφ}

    // columns: B = A·U
    for k in 0..d {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, cs * akp + s_phase_conj * akq);
        a.set(k, q, -s_phase * akp + cs * akq);
    }
    // rows: A' = U†·B
    for k in 0..d {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, cs * apk + s_phase * aqk);
        a.set(q, k, -s_phase_conj * apk + cs * aqk);
    }
    // the rotation zeroes this pair analytically; drop the roundoff residue
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));

    for k in 0..d {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, cs * vkp + s_phase_conj * vkq);
        v.set(k, q, -s_phase * vkp + cs * vkq);
    }
}

/// `exp(−i·t·H)` for Hermitian `H`, via the spectral decomposition:
/// `V·diag(e^{−i·t·λ})·V†`.
pub fn expm_neg_i(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let spectral = hermitian_eig(h)?;
    Ok(expm_from_spectral(&spectral, t))
}

/// Exponential from an already-computed decomposition (saves re-solving when
/// evolving the same Hamiltonian for several durations).
pub fn expm_from_spectral(spectral: &SpectralDecomposition, t: f64) -> ComplexMatrix {
    let phases: Vec<Complex64> = spectral
        .eigenvalues
        .iter()
        .map(|&l| Complex64::from_polar(1.0, -t * l))
        .collect();
    let v = &spectral.eigenvectors;
    v.matmul(&ComplexMatrix::diagonal(&phases)).matmul(&v.dagger())
}

/// Group sorted eigenvalues into degenerate clusters and return the
/// multiplicities. Eigenvalues within
/// [`tolerances::DEGENERACY_GROUPING`]`·max(1, scale)` of their neighbor
/// share a cluster.
pub fn eigenvalue_multiplicities(eigenvalues: &[f64], scale: f64) -> Vec<usize> {
    let threshold = tolerances::DEGENERACY_GROUPING * scale.max(1.0);
    let mut multiplicities = Vec::new();
    let mut iter = eigenvalues.iter();
    let Some(&first) = iter.next() else {
        return multiplicities;
    };
    let mut anchor = first;
    let mut count = 1usize;
    for &l in iter {
        if l - anchor <= threshold {
            count += 1;
        } else {
            multiplicities.push(count);
            anchor = l;
            count = 1;
        }
    }
    multiplicities.push(count);
    multiplicities
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{pauli, Axis};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_x_spectrum() {
        let spectral = hermitian_eig(&pauli(Axis::X)).unwrap();
        assert!((spectral.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((spectral.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn reconstruction_and_orthonormality() {
        let h = ComplexMatrix::new(
            4,
            vec![
                c(2.0, 0.0), c(1.0, -0.5), c(0.0, 0.3), c(-0.7, 0.0),
                c(1.0, 0.5), c(-1.0, 0.0), c(0.2, 0.0), c(0.0, -1.1),
                c(0.0, -0.3), c(0.2, 0.0), c(0.5, 0.0), c(0.9, 0.4),
                c(-0.7, 0.0), c(0.0, 1.1), c(0.9, -0.4), c(3.0, 0.0),
            ],
        );
        let spectral = hermitian_eig(&h).unwrap();
        let scale = h.frobenius_norm().max(1.0);
        assert!(spectral.reconstruct().frobenius_distance(&h) <= 1e-12 * scale);
        let v = &spectral.eigenvectors;
        assert!(v.dagger().matmul(v).frobenius_distance(&ComplexMatrix::identity(4)) <= 1e-12);
        // ascending order
        for w in spectral.eigenvalues.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn deterministic_for_identical_input() {
        let h = pauli(Axis::Y).tensor(&pauli(Axis::Y));
        let a = hermitian_eig(&h).unwrap();
        let b = hermitian_eig(&h).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m.set(0, 1, c(1.0, 0.0));
        assert!(hermitian_eig(&m).is_err());
    }

    #[test]
    fn expm_at_zero_time_is_identity() {
        let h = pauli(Axis::Z).tensor(&pauli(Axis::X));
        let u = expm_neg_i(&h, 0.0).unwrap();
        assert!(u.frobenius_distance(&ComplexMatrix::identity(4)) <= 1e-14);
    }

    #[test]
    fn expm_of_identity_is_global_phase() {
        let theta = 0.81;
        let u = expm_neg_i(&ComplexMatrix::identity(2), theta).unwrap();
        let expected = ComplexMatrix::identity(2).scale(Complex64::from_polar(1.0, -theta));
        assert!(u.frobenius_distance(&expected) <= 1e-14);
    }

    #[test]
    fn expm_output_is_unitary() {
        let h = pauli(Axis::X).tensor(&pauli(Axis::Y));
        let u = expm_neg_i(&h, 2.31).unwrap();
        assert!(u.unitarity_deviation() <= 1e-12);
    }

    #[test]
    fn multiplicity_grouping() {
        let eigs = [0.0, 1e-12, 2e-12, std::f64::consts::PI];
        assert_eq!(eigenvalue_multiplicities(&eigs, std::f64::consts::PI), vec![3, 1]);
        assert_eq!(eigenvalue_multiplicities(&[], 1.0), Vec::<usize>::new());
    }
}
