//! What *does* commute with the CNOT interaction Hamiltonian? The full
//! Hermitian commutant, computed as the nullspace of X ↦ i[V, X], has
//! dimension 6 (generic n) or 10 (n = 0) — strictly larger than the span
//! of the named conserved operators I⊗σx, σz⊗I, σz⊗σx, I — but none of it
//! contains a global rotation generator.
//!
//! ```bash
//! cargo run --example commutant_structure
//! ```

use gate_forge::gates::{pauli, Axis};
use gate_forge::matrix::ComplexMatrix;
use gate_forge::symmetry::{
    commutant_default, conserved_operator_check, isomorphism_transfer_check,
    joint_commutant_dimension,
};
use gate_forge::synthesis::{build_cnot_hamiltonian, SynthesisParams};

fn main() {
    for (n, m) in [(0i64, 0i64), (1, 0), (2, -1)] {
        let p = SynthesisParams::new(n, m, 1.0, 1.0).unwrap();
        let h = build_cnot_hamiltonian(&p);
        let result = commutant_default(&h).unwrap();
        let worst = result.residuals.iter().cloned().fold(0.0, f64::max);
        println!(
            "n={n:+} m={m:+}: commutant dimension {} (worst residual {:.3e})",
            result.dimension, worst
        );
    }

    println!("\nconserved-operator candidates against the default Hamiltonian:");
    let h = build_cnot_hamiltonian(&SynthesisParams::default());
    let check = conserved_operator_check(&h).unwrap();
    for (i, name) in check.operator_names.iter().enumerate() {
        println!(
            "  {name:<6} commute residual {:.3e}, projection defect {:.3e}",
            check.commute_residuals[i], check.projection_defects[i]
        );
    }
    println!(
        "  span contained in the {}-dimensional commutant: {}",
        check.commutant_dimension, check.passed
    );

    println!("\nwhy no rotation generator survives — the single-qubit obstruction:");
    println!(
        "  joint commutant of {{σz, σx}} has dimension {} (identity only): {}",
        joint_commutant_dimension(&[&pauli(Axis::Z), &pauli(Axis::X)], 1e-9).unwrap(),
        isomorphism_transfer_check()
    );
    println!(
        "  joint commutant of {{σz, σz}}: {}",
        joint_commutant_dimension(&[&pauli(Axis::Z), &pauli(Axis::Z)], 1e-9).unwrap()
    );
    let identity = ComplexMatrix::identity(2);
    println!(
        "  joint commutant of {{I, I}}:   {}",
        joint_commutant_dimension(&[&identity, &identity], 1e-9).unwrap()
    );

    // a rotation generator on qubit 1 would have to commute with σz there,
    // and on qubit 2 with σx — only multiples of the identity do both
    println!("\nso any symmetry generator acts trivially on each qubit: no global rotation.");
}
