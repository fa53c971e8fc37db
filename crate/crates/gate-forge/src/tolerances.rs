//! Named tolerance constants used for every verdict in this crate.
//!
//! All constructions here are exact up to floating-point roundoff, so the
//! tolerances only absorb accumulated rounding; none of them hides a model
//! approximation. Reports echo these values so a verdict can always be
//! audited against the threshold that produced it.

/// Gate-equality claims: `‖U_synth − U_target‖_F` must stay below this.
pub const GATE_EQUALITY: f64 = 1e-10;

/// Agreement between the block-form exponential and the dense spectral path.
pub const BLOCK_VS_DENSE: f64 = 1e-12;

/// `‖U†U − I‖_F` for every exponential-map output.
pub const UNITARITY: f64 = 1e-12;

/// Spectral reconstruction `‖VΛV† − H‖_F / max(1, ‖H‖_F)` and
/// eigenvector orthonormality `‖V†V − I‖_F`.
pub const SPECTRAL_RECONSTRUCTION: f64 = 1e-12;

/// Exponential group law `‖e^{-i(s+t)H} − e^{-isH}e^{-itH}‖_F`.
pub const EXP_GROUP_LAW: f64 = 1e-11;

/// Hermiticity precondition checks on operation inputs.
pub const HERMITICITY_CHECK: f64 = 1e-10;

/// Unitarity precondition checks (phase-aware distances).
pub const UNITARITY_CHECK: f64 = 1e-10;

/// Jacobi eigensolver: stop once off-diagonal Frobenius mass falls below
/// this factor times `‖H‖_F`.
pub const JACOBI_OFF_DIAGONAL: f64 = 1e-14;

/// Jacobi eigensolver sweep cap.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues closer than this (times `max(1, ‖H‖_F)`) count as degenerate
/// when grouping multiplicities.
pub const DEGENERACY_GROUPING: f64 = 1e-8;

/// Default commutant tolerance: basis elements must satisfy
/// `‖[H, B]‖_F ≤ COMMUTANT_RESIDUAL·‖H‖_F`.
pub const COMMUTANT_RESIDUAL: f64 = 1e-9;

/// Commutant basis Gram matrix must match the identity within this.
pub const COMMUTANT_ORTHONORMALITY: f64 = 1e-10;

/// Projection defect allowed when checking that an operator lies in the
/// span of a commutant basis.
pub const SPAN_PROJECTION_DEFECT: f64 = 1e-9;

/// Commutation residual allowed for the conserved-operator candidates.
pub const CONSERVED_OPERATOR_RESIDUAL: f64 = 1e-10;

/// A two-qubit Hamiltonian has *no* global rotation symmetry when the
/// minimal commutator residual over all axes exceeds this floor.
pub const ASYMMETRY_FLOOR: f64 = 0.5;

/// A rotation symmetry counts as exact when the minimal residual is below this.
pub const ROTATION_SYMMETRY: f64 = 1e-10;

/// Alignment requirement on the symmetry axis: `1 − |axis·x̂|` for the
/// x-basis gate variant.
pub const AXIS_ALIGNMENT: f64 = 1e-8;

/// Gate-level symmetry: `‖[σ₁ₓ + σ₂ₓ, U]‖_F` for the x-basis variant.
pub const GATE_SYMMETRY_COMMUTATOR: f64 = 1e-12;

/// Roundoff allowance added to first-order jitter bounds.
pub const JITTER_BOUND_SLACK: f64 = 1e-12;

/// Window for the distance ratio under successive halvings of the
/// timing-jitter epsilon (first-order scaling check).
pub const JITTER_RATIO_LOW: f64 = 0.45;
pub const JITTER_RATIO_HIGH: f64 = 0.55;

/// Allowed gap between the SVD rotation-search minimum and the minimum
/// found by dense sphere sampling.
pub const SPHERE_SAMPLING_GAP: f64 = 1e-6;

/// Number of sphere-sampling points for the rotation-search cross-check.
pub const SPHERE_SAMPLE_POINTS: usize = 10_000;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_ordering() {
        assert!(UNITARITY < EXP_GROUP_LAW);
        assert!(SPECTRAL_RECONSTRUCTION < HERMITICITY_CHECK);
        assert!(ROTATION_SYMMETRY < ASYMMETRY_FLOOR);
        assert!(JACOBI_OFF_DIAGONAL < SPECTRAL_RECONSTRUCTION);
    }
}
