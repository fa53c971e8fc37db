//! Redefining the control qubit in the x basis restores a global rotation
//! symmetry: the variant gate P₁ₓ⊗I + P₂ₓ⊗σx and its interaction
//! Hamiltonian both commute with rotations about x.
//!
//! ```bash
//! cargo run --example x_basis_variant
//! ```

use gate_forge::gates::{gate_matrix, pauli, Axis, GateSpec};
use gate_forge::matrix::ComplexMatrix;
use gate_forge::symmetry::{global_rotation, rotation_generator_search};
use gate_forge::synthesis::{
    build_cnot_x_variant_hamiltonian, verify_gate, SynthesisParams,
};

fn main() {
    let params = SynthesisParams::default();
    let hamiltonian = build_cnot_x_variant_hamiltonian(&params);
    let gate = gate_matrix(GateSpec::CnotXVariant);

    println!("x-basis variant gate (flips the target on the |−⟩ control component):");
    println!("{gate}");

    let residual = verify_gate(&hamiltonian, params.tau(), GateSpec::CnotXVariant).unwrap();
    println!("synthesis residual ‖exp(−iτV) − U‖_F = {residual:.3e}");

    let search = rotation_generator_search(&hamiltonian).unwrap();
    println!("\nrotation-generator search on the variant Hamiltonian:");
    println!(
        "  minimal residual {:.3e}, best axis ({:+.6}, {:+.6}, {:+.6})",
        search.min_residual, search.best_axis[0], search.best_axis[1], search.best_axis[2]
    );

    // the symmetry is carried by the gate itself as well
    let identity2 = ComplexMatrix::identity(2);
    let sx_total = pauli(Axis::X)
        .tensor(&identity2)
        .add(&identity2.tensor(&pauli(Axis::X)));
    let gate_residual = sx_total.commutator(&gate).unwrap().frobenius_norm();
    println!("  gate-level ‖[σ₁ₓ + σ₂ₓ, U]‖_F = {gate_residual:.3e}");

    println!("\nconjugating the gate by finite rotations about x leaves it fixed:");
    for theta in [0.5, 1.3, 2.9] {
        let r = global_rotation([1.0, 0.0, 0.0], theta, 2).unwrap();
        let conjugated = r.dagger().matmul(&gate).matmul(&r);
        println!("  θ = {theta}: ‖R†UR − U‖_F = {:.3e}", conjugated.frobenius_distance(&gate));
    }

    // contrast: the z-basis CNOT Hamiltonian fails the same test badly
    let cnot_h = gate_forge::synthesis::build_cnot_hamiltonian(&params);
    let cnot_search = rotation_generator_search(&cnot_h).unwrap();
    println!(
        "\nfor comparison, the standard CNOT Hamiltonian: minimal residual {:.6}",
        cnot_search.min_residual
    );
}
