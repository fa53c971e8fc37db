//! Synthesize the CNOT interaction Hamiltonian and verify the pulse
//! realizes the gate exactly.
//!
//! ```bash
//! cargo run --example synthesize_cnot
//! ```

use gate_forge::eigen::hermitian_eig;
use gate_forge::gates::GateSpec;
use gate_forge::synthesis::{build_cnot_hamiltonian, evolve, verify_gate, SynthesisParams};
use gate_forge::textfmt::matrix_to_text;

fn main() {
    // the minimal-energy member of the family: n = 0, m = 0, τ = 1, a2 = 1
    let params = SynthesisParams::default();
    let hamiltonian = build_cnot_hamiltonian(&params);

    println!(
        "synthesis parameters: n={} m={} tau={} a2={}",
        params.n(),
        params.m(),
        params.tau(),
        params.a2()
    );
    println!(
        "derived couplings: B1 = {:.6}, B2 = {:.6} (a2·B1 = {:.6}, a2·B2 = {:.6})",
        params.b1(),
        params.b2(),
        params.a2() * params.b1(),
        params.a2() * params.b2()
    );

    println!("\ninteraction Hamiltonian V:\n{hamiltonian}");
    let spectral = hermitian_eig(&hamiltonian).unwrap();
    println!("eigenvalues: {:?}", spectral.eigenvalues);

    let residual = verify_gate(&hamiltonian, params.tau(), GateSpec::Cnot).unwrap();
    println!("\n‖exp(−iτV) − U_CNOT‖_F = {residual:.3e}");

    let halfway = evolve(&hamiltonian, params.tau() / 2.0, params.tau()).unwrap();
    println!("\nhalf-pulse operator (t = τ/2) is not yet the gate:\n{halfway}");

    // a2 cancels: the same Hamiltonian for a wildly different coupling
    let other = build_cnot_hamiltonian(&SynthesisParams::new(0, 0, 1.0, 7.3).unwrap());
    println!(
        "a2 = 7.3 gives the identical matrix: distance {}",
        hamiltonian.frobenius_distance(&other)
    );

    println!("\ntext-format dump of V:\n{}", matrix_to_text(&hamiltonian));
}
