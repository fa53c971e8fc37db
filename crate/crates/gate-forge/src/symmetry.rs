//! Symmetry structure of interaction Hamiltonians: global-rotation
//! generator search, numerical commutants, the conserved-operator span
//! check, qubit-exchange asymmetry and the single-qubit isomorphism
//! argument.
//!
//! Global rotations are generated by the total spin `S_n = Σᵢ S_{i,n}`
//! (ħ = 1, `S_{i,n} = ½ n·σ` on qubit i). The map `n ↦ [S_n, H]` is linear
//! in the axis, so the minimal commutator residual over the whole sphere is
//! the smallest singular value of a 3-column matrix — computed exactly,
//! then cross-checkable against dense sphere sampling.

use num_complex::Complex64;

use crate::eigen::hermitian_eig;
use crate::error::{Error, Result};
use crate::gates::{pauli, swap_gate, Axis};
use crate::matrix::ComplexMatrix;
use crate::tolerances;

/// Single-qubit spin projection `½(nₓσₓ + n_yσ_y + n_zσ_z)`.
pub fn spin_component(axis: [f64; 3]) -> ComplexMatrix {
    pauli(Axis::X)
        .scale_re(0.5 * axis[0])
        .add(&pauli(Axis::Y).scale_re(0.5 * axis[1]))
        .add(&pauli(Axis::Z).scale_re(0.5 * axis[2]))
}

/// Total spin projection `Σᵢ S_{i,n}` on `num_qubits` qubits.
pub fn total_spin(axis: [f64; 3], num_qubits: usize) -> ComplexMatrix {
    let single = spin_component(axis);
    let dim = 1usize << num_qubits;
    let mut total = ComplexMatrix::zeros(dim);
    for site in 0..num_qubits {
        let mut term = ComplexMatrix::identity(1);
        for q in 0..num_qubits {
            let factor = if q == site {
                single.clone()
            } else {
                ComplexMatrix::identity(2)
            };
            term = term.tensor(&factor);
        }
        total = total.add(&term);
    }
    total
}

/// Global rotation `exp(−i·S_n·θ)` about a unit axis. Factorizes as the
/// tensor product of identical single-qubit rotations.
pub fn global_rotation(axis: [f64; 3], theta: f64, num_qubits: usize) -> Result<ComplexMatrix> {
    let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NonUnitAxis { norm });
    }
    crate::eigen::expm_neg_i(&total_spin(axis, num_qubits), theta)
}

/// Outcome of the global-rotation generator search on a two-qubit
/// Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationSearchResult {
    /// `min over unit axes n of ‖[S_n, H]‖_F` — the smallest singular value
    /// of the residual map.
    pub min_residual: f64,
    /// The minimizing unit axis (sign-canonicalized: its largest component
    /// is positive).
    pub best_axis: [f64; 3],
    /// All three singular values of the residual map, ascending.
    pub singular_values: [f64; 3],
}

/// Exact minimal commutator residual over all global-rotation axes.
///
/// Builds the 3×3 Gram matrix of the axis commutators `[S_a, H]`
/// (a = x, y, z) under the Frobenius inner product — the normal matrix of
/// the linearized residual map — and solves its eigenproblem. Requires a
/// Hermitian 4×4 input.
pub fn rotation_generator_search(h: &ComplexMatrix) -> Result<RotationSearchResult> {
    if h.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: h.dim(),
            right: 4,
        });
    }
    h.check_hermitian(tolerances::HERMITICITY_CHECK)?;

    let axes = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let commutators: Vec<ComplexMatrix> = axes
        .iter()
        .map(|&a| total_spin(a, 2).commutator(h).expect("dims match"))
        .collect();

    let mut gram = ComplexMatrix::zeros(3);
    for a in 0..3 {
        for b in 0..3 {
            let inner = commutators[a].frobenius_inner(&commutators[b]).re;
            gram.set(a, b, Complex64::new(inner, 0.0));
        }
    }

    let spectral = hermitian_eig(&gram).expect("gram matrix is symmetric");
    let singular_values = [
        spectral.eigenvalues[0].max(0.0).sqrt(),
        spectral.eigenvalues[1].max(0.0).sqrt(),
        spectral.eigenvalues[2].max(0.0).sqrt(),
    ];

    let mut best_axis = [
        spectral.eigenvectors.get(0, 0).re,
        spectral.eigenvectors.get(1, 0).re,
        spectral.eigenvectors.get(2, 0).re,
    ];
    let norm = (best_axis.iter().map(|c| c * c).sum::<f64>()).sqrt();
    for c in &mut best_axis {
        *c /= norm;
    }
    // canonical sign: the component of largest magnitude points positive
    let lead = best_axis
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.abs().partial_cmp(&b.abs()).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    if best_axis[lead] < 0.0 {
        for c in &mut best_axis {
            *c = -*c;
        }
    }

    Ok(RotationSearchResult {
        min_residual: singular_values[0],
        best_axis,
        singular_values,
    })
}

/// Commutator residual `‖[S_n, H]‖_F` for one axis; the objective the
/// search minimizes.
pub fn axis_residual(h: &ComplexMatrix, axis: [f64; 3]) -> f64 {
    total_spin(axis, 2)
        .commutator(h)
        .expect("dims match")
        .frobenius_norm()
}

/// Dense sphere-sampling cross-check for [`rotation_generator_search`]:
/// scans a Fibonacci lattice of `points` axes, then polishes the best one
/// with a derivative-free shrinking pattern search. Works purely from
/// residual evaluations (the commutator is linear in the axis, so each
/// sample is a combination of the three axis commutators), independent of
/// the eigenproblem route.
pub fn sphere_sampling_minimum(h: &ComplexMatrix, points: usize) -> Result<(f64, [f64; 3])> {
    if h.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: h.dim(),
            right: 4,
        });
    }
    h.check_hermitian(tolerances::HERMITICITY_CHECK)?;

    let base_axes = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let commutators: Vec<ComplexMatrix> = base_axes
        .iter()
        .map(|&a| total_spin(a, 2).commutator(h).expect("dims match"))
        .collect();
    let axis_residual = |axis: [f64; 3]| -> f64 {
        let mut sum = 0.0;
        for idx in 0..16 {
            let entry = commutators[0].entries()[idx] * axis[0]
                + commutators[1].entries()[idx] * axis[1]
                + commutators[2].entries()[idx] * axis[2];
            sum += entry.norm_sqr();
        }
        sum.sqrt()
    };

    let golden_angle = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
    let mut best_axis = [0.0, 0.0, 1.0];
    let mut best = f64::INFINITY;
    for i in 0..points {
        let z = 1.0 - 2.0 * (i as f64 + 0.5) / points as f64;
        let r = (1.0 - z * z).max(0.0).sqrt();
        let phi = golden_angle * i as f64;
        let axis = [r * phi.cos(), r * phi.sin(), z];
        let value = axis_residual(axis);
        if value < best {
            best = value;
            best_axis = axis;
        }
    }

    // local polish on the sphere: move along tangent directions, halve the
    // step when nothing improves
    let diag = std::f64::consts::FRAC_1_SQRT_2;
    let mut step = 0.2;
    while step > 1e-10 {
        let (t1, t2) = tangent_frame(best_axis);
        let mut improved = false;
        for (du, dv) in [
            (1.0, 0.0),
            (-1.0, 0.0),
            (0.0, 1.0),
            (0.0, -1.0),
            (diag, diag),
            (diag, -diag),
            (-diag, diag),
            (-diag, -diag),
        ] {
            let mut candidate = [0.0; 3];
            for k in 0..3 {
                candidate[k] = best_axis[k] + step * (du * t1[k] + dv * t2[k]);
            }
            let norm = (candidate.iter().map(|c| c * c).sum::<f64>()).sqrt();
            for c in &mut candidate {
                *c /= norm;
            }
            let value = axis_residual(candidate);
            if value < best {
                best = value;
                best_axis = candidate;
                improved = true;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }

    Ok((best, best_axis))
}

/// Orthonormal tangent directions at a point of the unit sphere.
fn tangent_frame(axis: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    // pick the coordinate axis least aligned with the point, then
    // Gram-Schmidt
    let seed = if axis[0].abs() <= axis[1].abs() && axis[0].abs() <= axis[2].abs() {
        [1.0, 0.0, 0.0]
    } else if axis[1].abs() <= axis[2].abs() {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let dot: f64 = (0..3).map(|k| seed[k] * axis[k]).sum();
    let mut t1 = [0.0; 3];
    for k in 0..3 {
        t1[k] = seed[k] - dot * axis[k];
    }
    let n1 = (t1.iter().map(|c| c * c).sum::<f64>()).sqrt();
    for c in &mut t1 {
        *c /= n1;
    }
    let t2 = [
        axis[1] * t1[2] - axis[2] * t1[1],
        axis[2] * t1[0] - axis[0] * t1[2],
        axis[0] * t1[1] - axis[1] * t1[0],
    ];
    (t1, t2)
}

/// Orthonormal basis of the Hermitian commutant of a Hamiltonian.
#[derive(Debug, Clone)]
pub struct CommutantResult {
    /// Real dimension of the Hermitian commutant (≥ 1: the identity always
    /// commutes).
    pub dimension: usize,
    /// Hermitian basis elements, orthonormal under `⟨A,B⟩ = Tr(A†B)`.
    pub basis: Vec<ComplexMatrix>,
    /// `‖[H, basis_k]‖_F` per element.
    pub residuals: Vec<f64>,
}

/// Orthonormal Hermitian basis of d×d matrices: unit diagonals, then
/// symmetric and antisymmetric off-diagonal pairs scaled by 1/√2, in a
/// fixed deterministic order.
pub fn hermitian_basis(dim: usize) -> Vec<ComplexMatrix> {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut basis = Vec::with_capacity(dim * dim);
    for k in 0..dim {
        let mut e = ComplexMatrix::zeros(dim);
        e.set(k, k, Complex64::new(1.0, 0.0));
        basis.push(e);
    }
    for k in 0..dim {
        for l in (k + 1)..dim {
            let mut s = ComplexMatrix::zeros(dim);
            s.set(k, l, Complex64::new(inv_sqrt2, 0.0));
            s.set(l, k, Complex64::new(inv_sqrt2, 0.0));
            basis.push(s);
            let mut a = ComplexMatrix::zeros(dim);
            a.set(k, l, Complex64::new(0.0, inv_sqrt2));
            a.set(l, k, Complex64::new(0.0, -inv_sqrt2));
            basis.push(a);
        }
    }
    basis
}

/// Matrix of the superoperator `X ↦ i[h, X]` in the orthonormal Hermitian
/// basis. Real and antisymmetric; its kernel is the Hermitian commutant.
fn adjoint_map_matrix(h: &ComplexMatrix, basis: &[ComplexMatrix]) -> Vec<Vec<f64>> {
    let n = basis.len();
    let i_unit = Complex64::new(0.0, 1.0);
    let mut columns = Vec::with_capacity(n);
    for b in basis {
        let image = h.commutator(b).expect("dims match").scale(i_unit);
        let column: Vec<f64> = basis.iter().map(|bj| bj.frobenius_inner(&image).re).collect();
        columns.push(column);
    }
    // columns[k][j] = ⟨B_j, i[h, B_k]⟩; transpose into row-major
    (0..n)
        .map(|j| (0..n).map(|k| columns[k][j]).collect())
        .collect()
}

/// Hermitian commutant of `h`: the nullspace of `X ↦ i[h, X]` on the
/// d²-dimensional real space of Hermitian matrices.
///
/// The superoperator matrix `M` is real antisymmetric, so `i·M` is
/// Hermitian and the singular values of `M` are the magnitudes of its
/// eigenvalues; those below `tol·‖h‖_F·d` are treated as zero. Supports
/// `d ≤ 8`; `tol` defaults to [`tolerances::COMMUTANT_RESIDUAL`] via
/// [`commutant_default`].
pub fn commutant(h: &ComplexMatrix, tol: f64) -> Result<CommutantResult> {
    let d = h.dim();
    if d > 8 {
        return Err(Error::InvalidParameter(format!(
            "commutant computation supports dim ≤ 8, got {d}"
        )));
    }
    h.check_hermitian(tolerances::HERMITICITY_CHECK)?;

    let basis = hermitian_basis(d);
    let m = adjoint_map_matrix(h, &basis);
    let n = basis.len();

    // K = i·M is Hermitian; |eig(K)| are the singular values of M.
    let mut k_matrix = ComplexMatrix::zeros(n);
    for (j, row) in m.iter().enumerate() {
        for (k, &value) in row.iter().enumerate() {
            k_matrix.set(j, k, Complex64::new(0.0, value));
        }
    }
    let spectral = hermitian_eig(&k_matrix)?;
    let threshold = tol * h.frobenius_norm() * d as f64;

    let kernel_columns: Vec<usize> = (0..n)
        .filter(|&i| spectral.eigenvalues[i].abs() <= threshold)
        .collect();
    let dimension = kernel_columns.len();

    // The kernel of a real matrix has a real basis: form the projector onto
    // the (complex) kernel — it is real — and take its eigenvectors with
    // eigenvalue 1.
    let mut projector = ComplexMatrix::zeros(n);
    for &col in &kernel_columns {
        for j in 0..n {
            for k in 0..n {
                let add = spectral.eigenvectors.get(j, col)
                    * spectral.eigenvectors.get(k, col).conj();
                projector.set(j, k, projector.get(j, k) + add);
            }
        }
    }
    let real_projector = {
        let mut p = ComplexMatrix::zeros(n);
        for j in 0..n {
            for k in 0..n {
                // symmetrize away the imaginary dust
                let value = 0.5 * (projector.get(j, k).re + projector.get(k, j).re);
                p.set(j, k, Complex64::new(value, 0.0));
            }
        }
        p
    };
    let projector_spectral = hermitian_eig(&real_projector)?;
    let mut coordinate_vectors: Vec<Vec<f64>> = Vec::with_capacity(dimension);
    for i in 0..n {
        if projector_spectral.eigenvalues[i] >= 0.5 {
            let v: Vec<f64> = (0..n)
                .map(|j| projector_spectral.eigenvectors.get(j, i).re)
                .collect();
            coordinate_vectors.push(v);
        }
    }
    debug_assert_eq!(coordinate_vectors.len(), dimension);

    let mut commutant_basis = Vec::with_capacity(dimension);
    let mut residuals = Vec::with_capacity(dimension);
    for coords in &coordinate_vectors {
        let mut element = ComplexMatrix::zeros(d);
        for (c, b) in coords.iter().zip(&basis) {
            element = element.add(&b.scale_re(*c));
        }
        residuals.push(h.commutator(&element).expect("dims match").frobenius_norm());
        commutant_basis.push(element);
    }

    Ok(CommutantResult {
        dimension,
        basis: commutant_basis,
        residuals,
    })
}

/// [`commutant`] at the default tolerance.
pub fn commutant_default(h: &ComplexMatrix) -> Result<CommutantResult> {
    commutant(h, tolerances::COMMUTANT_RESIDUAL)
}

/// Real dimension of the joint Hermitian commutant of several operators
/// (the intersection of their commutants).
pub fn joint_commutant_dimension(operators: &[&ComplexMatrix], tol: f64) -> Result<usize> {
    let d = operators
        .first()
        .map(|o| o.dim())
        .ok_or_else(|| Error::InvalidParameter("need at least one operator".into()))?;
    if d > 8 {
        return Err(Error::InvalidParameter(format!(
            "commutant computation supports dim ≤ 8, got {d}"
        )));
    }
    let basis = hermitian_basis(d);
    let n = basis.len();

    // G = Σ MᵀM over the operators; its kernel is the intersection. Squaring
    // is fine here because only the integer dimension is read off.
    let mut gram = ComplexMatrix::zeros(n);
    let mut scale: f64 = 0.0;
    for op in operators {
        if op.dim() != d {
            return Err(Error::DimensionMismatch {
                left: op.dim(),
                right: d,
            });
        }
        op.check_hermitian(tolerances::HERMITICITY_CHECK)?;
        scale = scale.max(op.frobenius_norm());
        let m = adjoint_map_matrix(op, &basis);
        for j in 0..n {
            for k in 0..n {
                let mut sum = 0.0;
                for row in &m {
                    sum += row[j] * row[k];
                }
                let value = gram.get(j, k) + Complex64::new(sum, 0.0);
                gram.set(j, k, value);
            }
        }
    }
    let spectral = hermitian_eig(&gram)?;
    // squaring halves the precision, so keep a noise floor above the
    // eigensolver's resolution of the squared matrix
    let threshold = (tol * scale * d as f64)
        .powi(2)
        .max(1e-13 * gram.frobenius_norm());
    Ok(spectral
        .eigenvalues
        .iter()
        .filter(|&&l| l.abs() <= threshold)
        .count())
}

/// Per-operator outcome of the conserved-operator span check.
#[derive(Debug, Clone, PartialEq)]
pub struct ConservedOperatorCheck {
    /// Fixed candidate list: I⊗σx, σz⊗I, σz⊗σx, I⊗I.
    pub operator_names: [&'static str; 4],
    /// `‖[H, O]‖_F` per candidate.
    pub commute_residuals: [f64; 4],
    /// `‖O − P_commutant(O)‖_F` per candidate.
    pub projection_defects: [f64; 4],
    /// Dimension of the commutant the candidates were projected onto.
    pub commutant_dimension: usize,
    /// True iff every candidate commutes (≤ 1e−10) and lies in the
    /// commutant span (defect ≤ 1e−9).
    pub passed: bool,
}

/// Checks that the conserved-operator candidates of the CNOT family —
/// I⊗σ₂ₓ, σ₁z⊗I, σ₁z⊗σ₂ₓ and the identity — commute with `h` and lie in
/// the span of its Hermitian commutant. The commutant is generally larger
/// than this span (dimension 6 or 10 vs 4), so this is a containment
/// check, not an equality.
pub fn conserved_operator_check(h: &ComplexMatrix) -> Result<ConservedOperatorCheck> {
    if h.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: h.dim(),
            right: 4,
        });
    }
    let identity2 = ComplexMatrix::identity(2);
    let candidates = [
        identity2.tensor(&pauli(Axis::X)),
        pauli(Axis::Z).tensor(&identity2),
        pauli(Axis::Z).tensor(&pauli(Axis::X)),
        ComplexMatrix::identity(4),
    ];
    let operator_names = ["I⊗σx", "σz⊗I", "σz⊗σx", "I⊗I"];

    let commutant_result = commutant_default(h)?;
    let mut commute_residuals = [0.0; 4];
    let mut projection_defects = [0.0; 4];
    for (idx, op) in candidates.iter().enumerate() {
        commute_residuals[idx] = h.commutator(op).expect("dims match").frobenius_norm();
        let mut projected = ComplexMatrix::zeros(4);
        for b in &commutant_result.basis {
            let coefficient = b.frobenius_inner(op).re;
            projected = projected.add(&b.scale_re(coefficient));
        }
        projection_defects[idx] = op.frobenius_distance(&projected);
    }
    let passed = commute_residuals
        .iter()
        .all(|&r| r <= tolerances::CONSERVED_OPERATOR_RESIDUAL)
        && projection_defects
            .iter()
            .all(|&d| d <= tolerances::SPAN_PROJECTION_DEFECT);

    Ok(ConservedOperatorCheck {
        operator_names,
        commute_residuals,
        projection_defects,
        commutant_dimension: commutant_result.dimension,
        passed,
    })
}

/// Qubit-exchange asymmetry: `‖SWAP·U·SWAP − U‖_F`. Nonzero means the
/// operator distinguishes the two qubits (the CNOT does: control and
/// target are not interchangeable).
pub fn swap_symmetry_check(u: &ComplexMatrix) -> Result<f64> {
    if u.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: 4,
        });
    }
    let swap = swap_gate();
    Ok(swap.matmul(u).matmul(&swap).frobenius_distance(u))
}

/// Numerical form of the isomorphism argument: no single-qubit Hermitian
/// operator commutes with both σz and σx except multiples of the identity,
/// i.e. the joint commutant of the pair has dimension exactly 1.
pub fn isomorphism_transfer_check() -> bool {
    let sz = pauli(Axis::Z);
    let sx = pauli(Axis::X);
    joint_commutant_dimension(&[&sz, &sx], tolerances::COMMUTANT_RESIDUAL)
        .map(|dim| dim == 1)
        .unwrap_or(false)
}
