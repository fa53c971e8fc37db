//! Synthesize the Toffoli interaction Hamiltonian: the same coupling on the
//! target qubit, gated by the two-control projector |11⟩⟨11|.
//!
//! ```bash
//! cargo run --example synthesize_toffoli
//! ```

use gate_forge::eigen::hermitian_eig;
use gate_forge::gates::{apply_to_basis, BasisLabel, GateSpec};
use gate_forge::synthesis::{build_toffoli_hamiltonian, verify_gate, SynthesisParams};

fn main() {
    let params = SynthesisParams::default();
    let hamiltonian = build_toffoli_hamiltonian(&params);

    println!("8×8 Toffoli interaction Hamiltonian (nonzero only on the |11⟩ control block):");
    println!("{hamiltonian}");

    let spectral = hermitian_eig(&hamiltonian).unwrap();
    println!("eigenvalues: {:?}", spectral.eigenvalues);

    let residual = verify_gate(&hamiltonian, params.tau(), GateSpec::Toffoli).unwrap();
    println!("\n‖exp(−iτV) − U_TOFFOLI‖_F = {residual:.3e}");

    println!("\ntruth table (controls, target) → (controls, target'):");
    for index in 0..8u32 {
        let bits = [
            ((index >> 2) & 1) as u8,
            ((index >> 1) & 1) as u8,
            (index & 1) as u8,
        ];
        let label = BasisLabel::z_bits(&bits);
        let image = apply_to_basis(GateSpec::Toffoli, &label).unwrap();
        println!("  |{}{}{}⟩ → |{}{}{}⟩",
            bits[0], bits[1], bits[2],
            image.bits()[0], image.bits()[1], image.bits()[2]);
    }

    // verification also holds across the whole integer family
    for (n, m, tau) in [(1, 0, 1.0), (-2, 2, 0.5), (2, -1, 2.0)] {
        let p = SynthesisParams::new(n, m, tau, 1.0).unwrap();
        let r = verify_gate(&build_toffoli_hamiltonian(&p), tau, GateSpec::Toffoli).unwrap();
        println!("n={n:+} m={m:+} tau={tau}: residual {r:.3e}");
    }
}
