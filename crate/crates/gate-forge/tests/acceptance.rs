//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Parameter grid used throughout: (n, m) ∈ {−2..2}², τ ∈ {0.5, 1, 2},
//! a2 ∈ {0.7, 1, 3} — 225 synthesis cases.

use std::f64::consts::PI;
use std::process::Command;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gate_forge::eigen::{eigenvalue_multiplicities, expm_neg_i, hermitian_eig};
use gate_forge::gates::{
    apply_to_basis, gate_matrix, operator_form_cnot, pauli, swap_gate, Axis, BasisLabel, GateSpec,
};
use gate_forge::matrix::ComplexMatrix;
use gate_forge::symmetry::{
    commutant_default, conserved_operator_check, hermitian_basis, rotation_generator_search,
    sphere_sampling_minimum, swap_symmetry_check,
};
use gate_forge::synthesis::{
    block_exponential, build_cnot_hamiltonian, build_cnot_x_variant_hamiltonian,
    build_toffoli_hamiltonian, evolve, jitter_analysis, SynthesisParams,
};

const N_RANGE: [i64; 5] = [-2, -1, 0, 1, 2];
const M_RANGE: [i64; 5] = [-2, -1, 0, 1, 2];
const TAU_RANGE: [f64; 3] = [0.5, 1.0, 2.0];
const A2_RANGE: [f64; 3] = [0.7, 1.0, 3.0];

fn grid() -> Vec<SynthesisParams> {
    let mut cases = Vec::new();
    for &n in &N_RANGE {
        for &m in &M_RANGE {
            for &tau in &TAU_RANGE {
                for &a2 in &A2_RANGE {
                    cases.push(SynthesisParams::new(n, m, tau, a2).unwrap());
                }
            }
        }
    }
    cases
}

fn criterion(number: u32, name: &str, ok: bool, detail: String) {
    println!(
        "criterion {number:2} [{}] {name} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {number} failed: {name} ({detail})");
}

#[test]
fn criterion_01_exact_cnot_synthesis() {
    let target = gate_matrix(GateSpec::Cnot);
    let mut worst: f64 = 0.0;
    for p in grid() {
        let u = evolve(&build_cnot_hamiltonian(&p), p.tau(), p.tau()).unwrap();
        worst = worst.max(u.frobenius_distance(&target));
    }
    criterion(
        1,
        "exact CNOT synthesis on the 225-case grid",
        worst <= 1e-10,
        format!("worst residual {worst:.3e} ≤ 1e-10"),
    );
}

#[test]
fn criterion_02_operator_form_identity() {
    let distance = operator_form_cnot().frobenius_distance(&gate_matrix(GateSpec::Cnot));
    criterion(
        2,
        "projector form equals the CNOT matrix entry-wise",
        distance == 0.0,
        format!("distance {distance:e}"),
    );
}

#[test]
fn criterion_03_basis_action() {
    let mut all_exact = true;
    let mut checked = 0;
    for spec in [GateSpec::Cnot, GateSpec::Toffoli] {
        let u = gate_matrix(spec);
        let qubits = spec.num_qubits();
        for index in 0..spec.dim() {
            let bits: Vec<u8> = (0..qubits)
                .map(|q| ((index >> (qubits - 1 - q)) & 1) as u8)
                .collect();
            let label = BasisLabel::z_bits(&bits);
            let image = apply_to_basis(spec, &label).unwrap();
            let lhs = u.mul_vec(&label.state_vector());
            let rhs = image.state_vector();
            all_exact &= lhs.iter().zip(&rhs).all(|(a, b)| a == b);
            checked += 1;
        }
    }
    criterion(
        3,
        "all 4 CNOT and 8 Toffoli basis mappings reproduced exactly",
        all_exact && checked == 12,
        format!("{checked} mappings, exact 0/1 arithmetic"),
    );
}

#[test]
fn criterion_04_toffoli_synthesis() {
    let target = gate_matrix(GateSpec::Toffoli);
    let mut worst: f64 = 0.0;
    for p in grid() {
        let u = evolve(&build_toffoli_hamiltonian(&p), p.tau(), p.tau()).unwrap();
        worst = worst.max(u.frobenius_distance(&target));
    }
    criterion(
        4,
        "exact Toffoli synthesis on the 225-case grid",
        worst <= 1e-10,
        format!("worst residual {worst:.3e} ≤ 1e-10"),
    );
}

#[test]
fn criterion_05_block_vs_dense_equivalence() {
    let mut worst: f64 = 0.0;
    for p in grid() {
        let block = block_exponential(&p);
        let dense = evolve(&build_cnot_hamiltonian(&p), p.tau(), p.tau()).unwrap();
        worst = worst.max(block.frobenius_distance(&dense));
    }
    criterion(
        5,
        "block-form exponential agrees with the dense spectral path",
        worst <= 1e-12,
        format!("worst disagreement {worst:.3e} ≤ 1e-12"),
    );
}

#[test]
fn criterion_06_no_global_rotation_symmetry() {
    let mut min_over_grid = f64::INFINITY;
    let mut worst_gap = f64::NEG_INFINITY;
    let mut ordering_ok = true;
    for &n in &N_RANGE {
        for &m in &M_RANGE {
            for &a2 in &A2_RANGE {
                let p = SynthesisParams::new(n, m, 1.0, a2).unwrap();
                let h = build_cnot_hamiltonian(&p);
                let search = rotation_generator_search(&h).unwrap();
                let (sampled, _) = sphere_sampling_minimum(&h, 10_000).unwrap();
                min_over_grid = min_over_grid.min(search.min_residual);
                worst_gap = worst_gap.max(sampled - search.min_residual);
                ordering_ok &= search.min_residual <= sampled + 1e-12;
            }
        }
    }
    criterion(
        6,
        "no rotation axis commutes with any grid CNOT Hamiltonian (τ=1)",
        min_over_grid > 0.5 && ordering_ok && worst_gap <= 1e-6,
        format!(
            "min residual {min_over_grid:.4} > 0.5, sampling gap ≤ {worst_gap:.3e} ≤ 1e-6"
        ),
    );
}

#[test]
fn criterion_07_x_variant_restores_symmetry() {
    let h = build_cnot_x_variant_hamiltonian(&SynthesisParams::default());
    let search = rotation_generator_search(&h).unwrap();
    let axis_angle = search.best_axis[0].abs().min(1.0).acos();

    let u = gate_matrix(GateSpec::CnotXVariant);
    let identity2 = ComplexMatrix::identity(2);
    let sx_total = pauli(Axis::X)
        .tensor(&identity2)
        .add(&identity2.tensor(&pauli(Axis::X)));
    let gate_residual = sx_total.commutator(&u).unwrap().frobenius_norm();

    criterion(
        7,
        "x-basis variant has an exact rotation symmetry about ±x",
        search.min_residual <= 1e-10 && axis_angle <= 1e-4 && gate_residual <= 1e-12,
        format!(
            "min residual {:.3e} ≤ 1e-10, axis off by {axis_angle:.3e} rad, \
             gate commutator {gate_residual:.3e} ≤ 1e-12",
            search.min_residual
        ),
    );
}

/// Brute-force nullity of the superoperator X ↦ [h, X] on Hermitian
/// matrices: build its real matrix in the orthonormal Hermitian basis from
/// first principles and run Gaussian elimination with partial pivoting.
fn brute_force_commutant_nullity(h: &ComplexMatrix) -> usize {
    let d = h.dim();
    let basis = hermitian_basis(d);
    let size = basis.len();
    // rows[j][k] = Tr(B_j · i[h, B_k])
    let mut rows = vec![vec![0.0f64; size]; size];
    for (k, b) in basis.iter().enumerate() {
        let image = h
            .commutator(b)
            .unwrap()
            .scale(Complex64::new(0.0, 1.0));
        for (j, bj) in basis.iter().enumerate() {
            rows[j][k] = bj.frobenius_inner(&image).re;
        }
    }

    let scale = h.frobenius_norm().max(1.0);
    let threshold = 1e-8 * scale;
    let mut rank = 0;
    let mut col = 0;
    while col < size && rank < size {
        let pivot_row = (rank..size)
            .max_by(|&a, &b| rows[a][col].abs().partial_cmp(&rows[b][col].abs()).unwrap())
            .unwrap();
        if rows[pivot_row][col].abs() <= threshold {
            col += 1;
            continue;
        }
        rows.swap(rank, pivot_row);
        let pivot_values = rows[rank].clone();
        let pivot = pivot_values[col];
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[col] / pivot;
            for (c, p) in pivot_values.iter().enumerate().skip(col) {
                row[c] -= factor * p;
            }
        }
        rank += 1;
        col += 1;
    }
    size - rank
}

#[test]
fn criterion_08_commutant_structure() {
    let p_generic = SynthesisParams::new(1, 0, 1.0, 1.0).unwrap();
    let h_generic = build_cnot_hamiltonian(&p_generic);
    let h_degenerate = build_cnot_hamiltonian(&SynthesisParams::default());

    let dim_generic = commutant_default(&h_generic).unwrap().dimension;
    let dim_degenerate = commutant_default(&h_degenerate).unwrap().dimension;

    // oracle 1: Σ mᵢ² over eigenvalue multiplicities
    let multiplicity_dim = |h: &ComplexMatrix| -> usize {
        let spectral = hermitian_eig(h).unwrap();
        eigenvalue_multiplicities(&spectral.eigenvalues, h.frobenius_norm())
            .iter()
            .map(|&m| m * m)
            .sum()
    };
    // oracle 2: brute-force elimination nullspace
    let oracles_agree = multiplicity_dim(&h_generic) == 6
        && multiplicity_dim(&h_degenerate) == 10
        && brute_force_commutant_nullity(&h_generic) == 6
        && brute_force_commutant_nullity(&h_degenerate) == 10;

    let mut span_contained = true;
    let mut worst_defect: f64 = 0.0;
    for p in grid() {
        let check = conserved_operator_check(&build_cnot_hamiltonian(&p)).unwrap();
        span_contained &= check.passed;
        for defect in check.projection_defects {
            worst_defect = worst_defect.max(defect);
        }
    }

    criterion(
        8,
        "commutant dimensions 6/10 (two oracles) and conserved span contained",
        dim_generic == 6 && dim_degenerate == 10 && oracles_agree && span_contained,
        format!(
            "dim(n=1)={dim_generic}, dim(n=0)={dim_degenerate}, \
             worst projection defect {worst_defect:.3e} ≤ 1e-9"
        ),
    );
}

#[test]
fn criterion_09_jitter_first_order_law() {
    let p = SynthesisParams::default();
    let epsilons = [1e-2, 5e-3, 2.5e-3];
    let mut bound_ok = true;
    let mut distances = Vec::new();
    for &eps in &epsilons {
        let [plus, minus] = jitter_analysis(&p, eps).unwrap();
        for r in [&plus, &minus] {
            bound_ok &= r.frobenius_distance <= PI * eps + 1e-12;
        }
        distances.push(plus.frobenius_distance);
    }
    let mut ratios_ok = true;
    let mut ratios = Vec::new();
    for w in distances.windows(2) {
        let ratio = w[1] / w[0];
        ratios.push(ratio);
        ratios_ok &= (0.45..=0.55).contains(&ratio);
    }
    criterion(
        9,
        "jitter distance obeys π·ε bound and halves with ε",
        bound_ok && ratios_ok,
        format!("halving ratios {ratios:.4?} ⊂ [0.45, 0.55]"),
    );
}

#[test]
fn criterion_10_swap_asymmetry() {
    let cnot_value = swap_symmetry_check(&gate_matrix(GateSpec::Cnot)).unwrap();
    let swap_value = swap_symmetry_check(&swap_gate()).unwrap();
    let identity_value = swap_symmetry_check(&ComplexMatrix::identity(4)).unwrap();
    let expected = 6.0f64.sqrt();
    criterion(
        10,
        "qubit exchange moves the CNOT by √6 and fixes SWAP and I",
        (cnot_value - expected).abs() <= 1e-12
            && cnot_value > 1.0
            && swap_value == 0.0
            && identity_value == 0.0,
        format!("‖SWAP·U·SWAP − U‖_F = {cnot_value:.12} (√6 = {expected:.12})"),
    );
}

fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let entries: Vec<Complex64> = (0..dim * dim)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let a = ComplexMatrix::new(dim, entries);
    a.add(&a.dagger()).scale_re(0.5)
}

#[test]
fn criterion_11_kernel_hygiene() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260809);
    let mut worst_reconstruction: f64 = 0.0;
    let mut worst_orthonormality: f64 = 0.0;
    let mut worst_unitarity: f64 = 0.0;
    let mut worst_group_law: f64 = 0.0;
    for i in 0..100 {
        let dim = [2, 4, 8][i % 3];
        let h = random_hermitian(&mut rng, dim);
        let scale = h.frobenius_norm().max(1.0);

        let spectral = hermitian_eig(&h).unwrap();
        worst_reconstruction = worst_reconstruction
            .max(spectral.reconstruct().frobenius_distance(&h) / scale);
        let v = &spectral.eigenvectors;
        worst_orthonormality = worst_orthonormality.max(
            v.dagger()
                .matmul(v)
                .frobenius_distance(&ComplexMatrix::identity(dim)),
        );

        let s: f64 = rng.gen_range(-10.0..10.0);
        let t: f64 = rng.gen_range(-10.0..10.0);
        let u_s = expm_neg_i(&h, s).unwrap();
        let u_t = expm_neg_i(&h, t).unwrap();
        let u_st = expm_neg_i(&h, s + t).unwrap();
        worst_unitarity = worst_unitarity
            .max(u_s.unitarity_deviation())
            .max(u_t.unitarity_deviation())
            .max(u_st.unitarity_deviation());
        worst_group_law = worst_group_law.max(u_st.frobenius_distance(&u_s.matmul(&u_t)));
    }
    criterion(
        11,
        "eigensolver and exponential hygiene on 100 random Hermitian matrices",
        worst_reconstruction <= 1e-12 && worst_orthonormality <= 1e-12
            && worst_unitarity <= 1e-12
            && worst_group_law <= 1e-11,
        format!(
            "reconstruction {worst_reconstruction:.2e}, orthonormality \
             {worst_orthonormality:.2e}, unitarity {worst_unitarity:.2e}, \
             group law {worst_group_law:.2e}"
        ),
    );
}

#[test]
fn criterion_12_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_gate-forge");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let verify = run(&["verify", "--gate", "cnot", "--n", "0", "--m", "0", "--tau", "1"]);
    let symmetry = run(&["symmetry", "--gate", "cnot"]);
    let bad_tau = run(&["verify", "--gate", "cnot", "--tau", "0"]);

    let structured = run(&["verify", "--format", "structured"]);
    let stdout = String::from_utf8_lossy(&structured.stdout).to_string();
    let round_trip = serde_json::from_str::<gate_forge::report::Report>(&stdout)
        .map(|parsed| gate_forge::report::render_structured(&parsed) == stdout)
        .unwrap_or(false);

    let exit = |out: &std::process::Output| out.status.code();
    criterion(
        12,
        "CLI exit statuses and structured-report round-trip",
        exit(&verify) == Some(0)
            && exit(&symmetry) == Some(0)
            && String::from_utf8_lossy(&symmetry.stdout).contains("NO GLOBAL ROTATION SYMMETRY")
            && exit(&bad_tau) == Some(2)
            && exit(&structured) == Some(0)
            && round_trip,
        format!(
            "verify→{:?}, symmetry→{:?}, tau=0→{:?}, round-trip {round_trip}",
            exit(&verify),
            exit(&symmetry),
            exit(&bad_tau)
        ),
    );
}
