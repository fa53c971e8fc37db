//! Interaction-Hamiltonian synthesis for the CNOT, Toffoli and x-basis
//! variant gates, plus pulse evolution, verification and timing-jitter
//! analysis.
//!
//! The construction (ħ = 1, so h = 2π): a rectangular pulse of duration τ
//! applies the time-independent coupling
//!
//! ```text
//! V = P_control ⊗ [ (2πn/τ)·π₊ₓ + ((2m+1)π/τ)·π₋ₓ ]
//! ```
//!
//! where `P_control` projects the control(s) onto `|1⟩` (CNOT: qubit 1;
//! Toffoli: qubits 1 and 2; x variant: the `|−⟩` state of qubit 1) and
//! π±ₓ are the σx eigenprojectors of the target. After duration τ the two
//! nonzero eigenphases land on e^{−2πin} = 1 and e^{−(2m+1)πi} = −1, so
//! exp(−iτV) is the exact gate for *any* integer pair (n, m).
//!
//! The coupling a2 is carried as an explicit parameter even though it
//! cancels against the derived levels B₁ = 2πn/(τ·a2), B₂ = (2m+1)π/(τ·a2);
//! the Hamiltonian uses the cancelled products, while [`block_exponential`]
//! re-multiplies τ·a2·B so the cancellation is exercised on an independent
//! route.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::eigen::{expm_from_spectral, hermitian_eig};
use crate::error::{Error, Result};
use crate::gates::{gate_matrix, projector, Basis, GateSpec};
use crate::matrix::{phase_distance, ComplexMatrix};

/// Free parameters of the synthesis: the integer pair (n, m), the pulse
/// duration τ > 0 and the coupling a2 ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthesisParams {
    n: i64,
    m: i64,
    tau: f64,
    a2: f64,
}

impl SynthesisParams {
    pub fn new(n: i64, m: i64, tau: f64, a2: f64) -> Result<Self> {
        if !tau.is_finite() || tau <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "tau must be a positive finite duration, got {tau}"
            )));
        }
        if !a2.is_finite() || a2 == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "a2 must be finite and nonzero, got {a2}"
            )));
        }
        Ok(Self { n, m, tau, a2 })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn a2(&self) -> f64 {
        self.a2
    }

    /// Target level on the π₊ₓ eigenspace: B₁ = 2πn/(τ·a2).
    pub fn b1(&self) -> f64 {
        2.0 * PI * self.n as f64 / (self.tau * self.a2)
    }

    /// Target level on the π₋ₓ eigenspace: B₂ = (2m+1)π/(τ·a2).
    pub fn b2(&self) -> f64 {
        (2 * self.m + 1) as f64 * PI / (self.tau * self.a2)
    }
}

impl Default for SynthesisParams {
    /// The minimal-energy member of the family: n = 0, m = 0, τ = 1, a2 = 1.
    fn default() -> Self {
        Self {
            n: 0,
            m: 0,
            tau: 1.0,
            a2: 1.0,
        }
    }
}

/// Target-qubit coupling `(2πn/τ)·π₊ₓ + ((2m+1)π/τ)·π₋ₓ` with the a2
/// cancellation already carried out.
fn target_coupling(p: &SynthesisParams) -> ComplexMatrix {
    let plus_level = 2.0 * PI * p.n as f64 / p.tau;
    let minus_level = (2 * p.m + 1) as f64 * PI / p.tau;
    projector(Basis::X, 0)
        .scale_re(plus_level)
        .add(&projector(Basis::X, 1).scale_re(minus_level))
}

/// The 4×4 CNOT interaction Hamiltonian: `|1⟩⟨1| ⊗ coupling` on
/// (control, target). Hermitian, independent of a2.
pub fn build_cnot_hamiltonian(p: &SynthesisParams) -> ComplexMatrix {
    projector(Basis::Z, 1).tensor(&target_coupling(p))
}

/// The 8×8 Toffoli interaction Hamiltonian: `|11⟩⟨11| ⊗ coupling` on
/// (control, control, target); zero on the six-dimensional subspace where
/// the controls differ from `|11⟩`.
pub fn build_toffoli_hamiltonian(p: &SynthesisParams) -> ComplexMatrix {
    let p11 = projector(Basis::Z, 1).tensor(&projector(Basis::Z, 1));
    p11.tensor(&target_coupling(p))
}

/// Hamiltonian for the x-basis gate variant: `|−⟩⟨−| ⊗ coupling`, the
/// control projector taken in the x basis of qubit 1.
pub fn build_cnot_x_variant_hamiltonian(p: &SynthesisParams) -> ComplexMatrix {
    projector(Basis::X, 1).tensor(&target_coupling(p))
}

/// Interaction Hamiltonian realizing `gate` with parameters `p`.
pub fn hamiltonian_for(gate: GateSpec, p: &SynthesisParams) -> ComplexMatrix {
    match gate {
        GateSpec::Cnot => build_cnot_hamiltonian(p),
        GateSpec::Toffoli => build_toffoli_hamiltonian(p),
        GateSpec::CnotXVariant => build_cnot_x_variant_hamiltonian(p),
    }
}

/// Rectangular-pulse evolution: `exp(−i·min(t, τ)·H)`. The pulse is on for
/// `t ∈ [0, τ]`; afterwards the system evolves freely (here trivially), so
/// the operator is constant for `t ≥ τ`.
pub fn evolve(h: &ComplexMatrix, t: f64, tau: f64) -> Result<ComplexMatrix> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "evolution time must be non-negative, got {t}"
        )));
    }
    if !tau.is_finite() || tau <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "pulse duration must be positive, got {tau}"
        )));
    }
    let spectral = hermitian_eig(h)?;
    Ok(expm_from_spectral(&spectral, t.min(tau)))
}

/// `exp(−iτV)` by the block split, with no dense eigensolve:
/// `P₀ ⊗ I + P₁ ⊗ (e^{−iτ·a2·B₁}·π₊ₓ + e^{−iτ·a2·B₂}·π₋ₓ)`.
///
/// The scalar phases use the *uncancelled* τ·a2·B products, making this an
/// algebraically independent route from the dense spectral path.
pub fn block_exponential(p: &SynthesisParams) -> ComplexMatrix {
    let phase_plus = Complex64::from_polar(1.0, -p.tau * p.a2 * p.b1());
    let phase_minus = Complex64::from_polar(1.0, -p.tau * p.a2 * p.b2());
    let target_block = projector(Basis::X, 0)
        .scale(phase_plus)
        .add(&projector(Basis::X, 1).scale(phase_minus));
    let keep = projector(Basis::Z, 0).tensor(&ComplexMatrix::identity(2));
    let flip = projector(Basis::Z, 1).tensor(&target_block);
    keep.add(&flip)
}

/// Frobenius residual `‖exp(−iτH) − U_target‖_F`; the synthesis succeeds
/// iff this stays below [`crate::tolerances::GATE_EQUALITY`].
pub fn verify_gate(h: &ComplexMatrix, tau: f64, target: GateSpec) -> Result<f64> {
    let target_matrix = gate_matrix(target);
    if h.dim() != target_matrix.dim() {
        return Err(Error::DimensionMismatch {
            left: h.dim(),
            right: target_matrix.dim(),
        });
    }
    let u = evolve(h, tau, tau)?;
    Ok(u.frobenius_distance(&target_matrix))
}

/// Sign of the pulse-duration error τ′ = τ ± ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(&self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Effect of one signed timing error on the realized gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JitterReport {
    pub epsilon: f64,
    pub sign: Sign,
    /// `‖U(τ±ε) − U(τ)‖_F`.
    pub frobenius_distance: f64,
    /// Global-phase-invariant distance between the same pair.
    pub phase_distance: f64,
    /// `|Tr(U_target†·U(τ±ε))| / dim`, in [0, 1].
    pub fidelity: f64,
    /// First-order ceiling `ε·‖V‖_F`; the measured distance stays below
    /// this plus roundoff slack.
    pub first_order_bound: f64,
}

/// Timing-jitter analysis for the CNOT synthesis (see
/// [`jitter_analysis_for`] for the other gates). Returns one report per
/// sign of τ′ = τ ± ε. Requires `0 ≤ ε ≤ τ/10`.
pub fn jitter_analysis(p: &SynthesisParams, epsilon: f64) -> Result<[JitterReport; 2]> {
    jitter_analysis_for(GateSpec::Cnot, p, epsilon)
}

/// Timing-jitter analysis against an arbitrary catalog gate.
pub fn jitter_analysis_for(
    gate: GateSpec,
    p: &SynthesisParams,
    epsilon: f64,
) -> Result<[JitterReport; 2]> {
    jitter_reports(&hamiltonian_for(gate, p), gate, p.tau, epsilon)
}

/// Timing-jitter analysis of an explicit Hamiltonian: compares
/// `exp(−i(τ±ε)H)` against the nominal pulse and the target gate.
pub fn jitter_reports(
    h: &ComplexMatrix,
    target: GateSpec,
    tau: f64,
    epsilon: f64,
) -> Result<[JitterReport; 2]> {
    if !tau.is_finite() || tau <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "pulse duration must be positive, got {tau}"
        )));
    }
    if !epsilon.is_finite() || epsilon < 0.0 || epsilon > tau / 10.0 {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in [0, tau/10] = [0, {}], got {epsilon}",
            tau / 10.0
        )));
    }
    let target_matrix = gate_matrix(target);
    if h.dim() != target_matrix.dim() {
        return Err(Error::DimensionMismatch {
            left: h.dim(),
            right: target_matrix.dim(),
        });
    }
    let h_norm = h.frobenius_norm();
    let spectral = hermitian_eig(h)?;
    let nominal = expm_from_spectral(&spectral, tau);
    let dim = target_matrix.dim() as f64;

    let report_for = |sign: Sign| {
        let t = match sign {
            Sign::Plus => tau + epsilon,
            Sign::Minus => tau - epsilon,
        };
        let perturbed = expm_from_spectral(&spectral, t);
        let distances = phase_distance(&perturbed, &nominal)
            .expect("spectral exponentials are unitary by construction");
        let fidelity = target_matrix.dagger().matmul(&perturbed).trace().norm() / dim;
        JitterReport {
            epsilon,
            sign,
            frobenius_distance: distances.frobenius,
            phase_distance: distances.phase_invariant,
            fidelity: fidelity.min(1.0),
            first_order_bound: epsilon * h_norm,
        }
    };

    Ok([report_for(Sign::Plus), report_for(Sign::Minus)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::swap_gate;

    fn params(n: i64, m: i64, tau: f64, a2: f64) -> SynthesisParams {
        SynthesisParams::new(n, m, tau, a2).unwrap()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "expected {b}, got {a} (tol {tol})");
    }

    #[test]
    fn params_validation() {
        assert!(SynthesisParams::new(0, 0, 0.0, 1.0).is_err());
        assert!(SynthesisParams::new(0, 0, -1.0, 1.0).is_err());
        assert!(SynthesisParams::new(0, 0, 1.0, 0.0).is_err());
        assert!(SynthesisParams::new(0, 0, f64::NAN, 1.0).is_err());
        assert!(SynthesisParams::new(-3, 7, 0.25, -2.5).is_ok());
    }

    #[test]
    fn coupling_levels_cancel_a2() {
        let p = params(2, -1, 0.5, 7.3);
        assert_close(p.a2() * p.b1(), 2.0 * PI * 2.0 / 0.5, 1e-12);
        assert_close(p.a2() * p.b2(), -PI / 0.5, 1e-12);
    }

    #[test]
    fn default_hamiltonian_is_rank_one() {
        // V(0,0,1,1) = π·|1⟩⟨1| ⊗ |−⟩⟨−|: lower-right block π/2·[[1,−1],[−1,1]]
        let h = build_cnot_hamiltonian(&SynthesisParams::default());
        let half_pi = PI / 2.0;
        let expected = ComplexMatrix::from_real(
            4,
            &[
                0.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, half_pi, -half_pi, //
                0.0, 0.0, -half_pi, half_pi,
            ],
        );
        assert_eq!(h, expected);

        let eigs = hermitian_eig(&h).unwrap().eigenvalues;
        for &e in &eigs[..3] {
            assert_close(e, 0.0, 1e-12);
        }
        assert_close(eigs[3], PI, 1e-12);
    }

    #[test]
    fn hamiltonian_is_independent_of_a2() {
        let reference = build_cnot_hamiltonian(&params(1, -2, 0.5, 1.0));
        for a2 in [7.3, -0.2, 1000.0] {
            let other = build_cnot_hamiltonian(&params(1, -2, 0.5, a2));
            assert_eq!(reference, other); // bit-identical, not just close
        }
    }

    #[test]
    fn spectrum_follows_parameters() {
        // eigenvalues {0, 0, (2m+1)π/τ, 2πn/τ} sorted ascending
        let eigs = hermitian_eig(&build_cnot_hamiltonian(&params(1, 0, 2.0, 1.0)))
            .unwrap()
            .eigenvalues;
        assert_close(eigs[0], 0.0, 1e-12);
        assert_close(eigs[1], 0.0, 1e-12);
        assert_close(eigs[2], PI / 2.0, 1e-12);
        assert_close(eigs[3], PI, 1e-12);

        let eigs = hermitian_eig(&build_cnot_hamiltonian(&params(1, 0, 1.0, 1.0)))
            .unwrap()
            .eigenvalues;
        assert_close(eigs[2], PI, 1e-12);
        assert_close(eigs[3], 2.0 * PI, 1e-12);
    }

    #[test]
    fn toffoli_hamiltonian_supported_on_control_pair() {
        let h = build_toffoli_hamiltonian(&SynthesisParams::default());
        for i in 0..8 {
            for j in 0..8 {
                if i < 6 || j < 6 {
                    assert_eq!(h.get(i, j), Complex64::new(0.0, 0.0));
                }
            }
        }
        let eigs = hermitian_eig(&h).unwrap().eigenvalues;
        assert_close(eigs[7], PI, 1e-12);
        assert_close(eigs[6], 0.0, 1e-12);
    }

    #[test]
    fn toffoli_evolution_matches_gate() {
        let h = build_toffoli_hamiltonian(&SynthesisParams::default());
        let residual = verify_gate(&h, 1.0, GateSpec::Toffoli).unwrap();
        assert!(residual <= 1e-10);
    }

    #[test]
    fn evolve_identity_at_zero_time() {
        let h = build_cnot_hamiltonian(&SynthesisParams::default());
        let u = evolve(&h, 0.0, 1.0).unwrap();
        assert!(u.frobenius_distance(&ComplexMatrix::identity(4)) <= 1e-13);
    }

    #[test]
    fn evolve_realizes_cnot_at_tau() {
        let h = build_cnot_hamiltonian(&SynthesisParams::default());
        let u = evolve(&h, 1.0, 1.0).unwrap();
        assert!(u.frobenius_distance(&gate_matrix(GateSpec::Cnot)) <= 1e-12);
    }

    #[test]
    fn evolve_is_constant_after_pulse() {
        let h = build_cnot_hamiltonian(&SynthesisParams::default());
        let at_tau = evolve(&h, 1.0, 1.0).unwrap();
        let later = evolve(&h, 5.0, 1.0).unwrap();
        assert_eq!(at_tau, later);
    }

    #[test]
    fn evolve_rejects_bad_inputs() {
        let h = build_cnot_hamiltonian(&SynthesisParams::default());
        assert!(evolve(&h, -0.1, 1.0).is_err());
        assert!(evolve(&h, 1.0, 0.0).is_err());
        let not_hermitian = {
            let mut m = ComplexMatrix::zeros(2);
            m.set(0, 1, Complex64::new(1.0, 0.0));
            m
        };
        assert!(evolve(&not_hermitian, 1.0, 1.0).is_err());
    }

    #[test]
    fn block_exponential_gives_cnot_for_small_params() {
        let u = block_exponential(&SynthesisParams::default());
        assert!(u.frobenius_distance(&gate_matrix(GateSpec::Cnot)) <= 1e-12);
        // n = 1 winds the π₊ phase through a full turn, landing on CNOT again
        let u1 = block_exponential(&params(1, 0, 1.0, 1.0));
        assert!(u1.frobenius_distance(&gate_matrix(GateSpec::Cnot)) <= 1e-12);
    }

    #[test]
    fn block_and_dense_routes_agree_on_grid() {
        for n in -2..=2 {
            for m in -2..=2 {
                let p = params(n, m, 1.0, 1.0);
                let block = block_exponential(&p);
                let dense = evolve(&build_cnot_hamiltonian(&p), p.tau(), p.tau()).unwrap();
                assert!(
                    block.frobenius_distance(&dense) <= 1e-12,
                    "disagreement at n={n}, m={m}"
                );
            }
        }
    }

    #[test]
    fn verify_gate_examples() {
        let exact = verify_gate(
            &build_cnot_hamiltonian(&SynthesisParams::default()),
            1.0,
            GateSpec::Cnot,
        )
        .unwrap();
        assert!(exact <= 1e-12);

        let p = params(3, -2, 0.5, 2.0);
        let general = verify_gate(&build_cnot_hamiltonian(&p), 0.5, GateSpec::Cnot).unwrap();
        assert!(general <= 1e-10);

        let idle = verify_gate(&ComplexMatrix::zeros(4), 1.0, GateSpec::Cnot).unwrap();
        assert_close(idle, 2.0, 1e-12);

        assert!(verify_gate(&ComplexMatrix::zeros(2), 1.0, GateSpec::Cnot).is_err());
    }

    #[test]
    fn hamiltonian_is_diagonal_in_z_cross_x_basis() {
        // conjugating by I ⊗ Hadamard must diagonalize every grid Hamiltonian
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let hadamard = ComplexMatrix::from_real(2, &[s, s, s, -s]);
        let w = ComplexMatrix::identity(2).tensor(&hadamard);
        for n in -2..=2 {
            for m in -2..=2 {
                let h = build_cnot_hamiltonian(&params(n, m, 1.0, 1.0));
                let rotated = w.dagger().matmul(&h).matmul(&w);
                assert!(rotated.off_diagonal_norm() <= 1e-14);
            }
        }
    }

    #[test]
    fn jitter_zero_epsilon_is_exact() {
        let [plus, minus] = jitter_analysis(&SynthesisParams::default(), 0.0).unwrap();
        for r in [plus, minus] {
            assert!(r.frobenius_distance <= 1e-12);
            assert!(r.phase_distance <= 1e-12);
            assert_close(r.fidelity, 1.0, 1e-12);
        }
    }

    #[test]
    fn jitter_respects_first_order_bound() {
        // ‖τV‖_F = π at the default point, so the bound reads π·ε
        let [plus, minus] = jitter_analysis(&SynthesisParams::default(), 0.01).unwrap();
        for r in [plus, minus] {
            assert_close(r.first_order_bound, PI * 0.01, 1e-14);
            assert!(r.frobenius_distance <= r.first_order_bound + 1e-12);
            assert!(r.fidelity < 1.0);
        }
    }

    #[test]
    fn jitter_distance_halves_with_epsilon() {
        let p = SynthesisParams::default();
        let d1 = jitter_analysis(&p, 0.01).unwrap()[0].frobenius_distance;
        let d2 = jitter_analysis(&p, 0.005).unwrap()[0].frobenius_distance;
        let ratio = d2 / d1;
        assert!((0.45..=0.55).contains(&ratio), "ratio {ratio} out of window");
    }

    #[test]
    fn jitter_rejects_out_of_range_epsilon() {
        let p = SynthesisParams::default();
        assert!(jitter_analysis(&p, 0.2).is_err()); // > tau/10
        assert!(jitter_analysis(&p, -0.01).is_err());
    }

    #[test]
    fn x_variant_hamiltonian_realizes_variant_gate() {
        let h = build_cnot_x_variant_hamiltonian(&SynthesisParams::default());
        let residual = verify_gate(&h, 1.0, GateSpec::CnotXVariant).unwrap();
        assert!(residual <= 1e-12);
    }

    #[test]
    fn swap_is_not_in_the_family() {
        // sanity: the synthesized evolution is CNOT, not SWAP
        let u = evolve(&build_cnot_hamiltonian(&SynthesisParams::default()), 1.0, 1.0).unwrap();
        assert!(u.frobenius_distance(&swap_gate()) > 1.0);
    }
}
