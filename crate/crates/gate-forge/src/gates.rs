//! Gate catalog: Pauli matrices, basis projectors, the CNOT (matrix and
//! operator form), the Toffoli, and the x-basis CNOT variant.
//!
//! Conventions: qubit 1 is the leftmost tensor factor, controls come before
//! the target, `|0⟩` / `|1⟩` are the ±1 eigenstates of σz, and `|±⟩` the ±1
//! eigenstates of σx. Projector outcomes follow the eigenvalue order:
//! outcome 0 ↔ eigenvalue +1, outcome 1 ↔ eigenvalue −1, which makes
//! `projector(β, 0) − projector(β, 1)` the Pauli matrix of basis β.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, SystemShape};

/// Pauli axis selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Single-qubit measurement basis selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Z,
    X,
}

/// The standard 2×2 Pauli matrix for `axis`, written in the z basis.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    let (r, i) = (|v: f64| Complex64::new(v, 0.0), |v: f64| Complex64::new(0.0, v));
    match axis {
        Axis::X => ComplexMatrix::new(2, vec![r(0.0), r(1.0), r(1.0), r(0.0)]),
        Axis::Y => ComplexMatrix::new(2, vec![r(0.0), i(-1.0), i(1.0), r(0.0)]),
        Axis::Z => ComplexMatrix::new(2, vec![r(1.0), r(0.0), r(0.0), r(-1.0)]),
    }
}

/// Rank-1 projector onto the `outcome` eigenstate of `basis`
/// (outcome 0 ↔ eigenvalue +1, outcome 1 ↔ eigenvalue −1).
pub fn projector(basis: Basis, outcome: u8) -> ComplexMatrix {
    assert!(outcome <= 1, "outcome must be 0 or 1");
    match (basis, outcome) {
        (Basis::Z, 0) => ComplexMatrix::from_real(2, &[1.0, 0.0, 0.0, 0.0]),
        (Basis::Z, _) => ComplexMatrix::from_real(2, &[0.0, 0.0, 0.0, 1.0]),
        (Basis::X, 0) => ComplexMatrix::from_real(2, &[0.5, 0.5, 0.5, 0.5]),
        (Basis::X, _) => ComplexMatrix::from_real(2, &[0.5, -0.5, -0.5, 0.5]),
    }
}

/// Gate selector; the kind fixes the qubit count and the control/target
/// layout (controls first, target last).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateSpec {
    Cnot,
    Toffoli,
    CnotXVariant,
}

impl GateSpec {
    pub fn num_qubits(&self) -> usize {
        match self {
            GateSpec::Cnot | GateSpec::CnotXVariant => 2,
            GateSpec::Toffoli => 3,
        }
    }

    pub fn dim(&self) -> usize {
        self.shape().dim()
    }

    pub fn shape(&self) -> SystemShape {
        SystemShape::new(self.num_qubits())
    }

    /// Control qubit indices (0-based, tensor order).
    pub fn controls(&self) -> &'static [usize] {
        match self {
            GateSpec::Cnot | GateSpec::CnotXVariant => &[0],
            GateSpec::Toffoli => &[0, 1],
        }
    }

    /// Target qubit index (0-based, tensor order).
    pub fn target(&self) -> usize {
        self.num_qubits() - 1
    }

    /// The CLI spelling of this gate.
    pub fn name(&self) -> &'static str {
        match self {
            GateSpec::Cnot => "cnot",
            GateSpec::Toffoli => "toffoli",
            GateSpec::CnotXVariant => "cnot-x",
        }
    }
}

impl fmt::Display for GateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cnot" => Ok(GateSpec::Cnot),
            "toffoli" => Ok(GateSpec::Toffoli),
            "cnot-x" => Ok(GateSpec::CnotXVariant),
            other => Err(Error::InvalidParameter(format!(
                "unknown gate `{other}` (expected cnot, toffoli or cnot-x)"
            ))),
        }
    }
}

/// The unitary matrix of a gate.
///
/// CNOT and Toffoli have exact 0/1 entries; the x-basis variant flips the
/// target conditioned on the `|−⟩` component of qubit 1.
pub fn gate_matrix(spec: GateSpec) -> ComplexMatrix {
    match spec {
        GateSpec::Cnot => ComplexMatrix::from_real(
            4,
            &[
                1.0, 0.0, 0.0, 0.0, //
                0.0, 1.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, 1.0, //
                0.0, 0.0, 1.0, 0.0,
            ],
        ),
        GateSpec::Toffoli => {
            let mut m = ComplexMatrix::identity(8);
            let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
            m.set(6, 6, zero);
            m.set(7, 7, zero);
            m.set(6, 7, one);
            m.set(7, 6, one);
            m
        }
        GateSpec::CnotXVariant => {
            let keep = projector(Basis::X, 0).tensor(&ComplexMatrix::identity(2));
            let flip = projector(Basis::X, 1).tensor(&pauli(Axis::X));
            keep.add(&flip)
        }
    }
}

/// The projector form of the CNOT:
/// `projector(z,0) ⊗ I + projector(z,1) ⊗ σx` on (control, target).
///
/// Built independently of [`gate_matrix`], so their entry-wise equality is a
/// meaningful check rather than a tautology.
pub fn operator_form_cnot() -> ComplexMatrix {
    let keep = projector(Basis::Z, 0).tensor(&ComplexMatrix::identity(2));
    let flip = projector(Basis::Z, 1).tensor(&pauli(Axis::X));
    keep.add(&flip)
}

/// Two-qubit exchange operator `SWAP |ab⟩ = |ba⟩`.
pub fn swap_gate() -> ComplexMatrix {
    ComplexMatrix::from_real(
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, 0.0, 1.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0,
        ],
    )
}

/// Product basis state label: one bit and one basis tag per qubit, in
/// tensor order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisLabel {
    bits: Vec<u8>,
    tags: Vec<Basis>,
}

impl BasisLabel {
    pub fn new(bits: Vec<u8>, tags: Vec<Basis>) -> Self {
        assert_eq!(bits.len(), tags.len(), "one tag per bit");
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        Self { bits, tags }
    }

    /// All-z label, the computational basis.
    pub fn z_bits(bits: &[u8]) -> Self {
        Self::new(bits.to_vec(), vec![Basis::Z; bits.len()])
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn tags(&self) -> &[Basis] {
        &self.tags
    }

    /// Amplitudes of the labeled product state in the computational basis.
    pub fn state_vector(&self) -> Vec<Complex64> {
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for (&bit, &tag) in self.bits.iter().zip(&self.tags) {
            let factor: [f64; 2] = match (tag, bit) {
                (Basis::Z, 0) => [1.0, 0.0],
                (Basis::Z, _) => [0.0, 1.0],
                (Basis::X, 0) => [inv_sqrt2, inv_sqrt2],
                (Basis::X, _) => [inv_sqrt2, -inv_sqrt2],
            };
            let mut next = Vec::with_capacity(amps.len() * 2);
            for a in &amps {
                next.push(a * factor[0]);
                next.push(a * factor[1]);
            }
            amps = next;
        }
        amps
    }
}

/// Permute a basis label through a gate: the target bit flips iff every
/// control reads outcome 1 ("not 0" = 1, "not 1" = 0).
///
/// CNOT and Toffoli act on all-z labels; the x variant expects the control
/// tagged x and the target tagged z. Anything else is rejected.
pub fn apply_to_basis(spec: GateSpec, label: &BasisLabel) -> Result<BasisLabel> {
    if label.len() != spec.num_qubits() {
        return Err(Error::InvalidLabel(format!(
            "label has {} qubits, gate {} needs {}",
            label.len(),
            spec.name(),
            spec.num_qubits()
        )));
    }
    let expected_tags: Vec<Basis> = match spec {
        GateSpec::Cnot | GateSpec::Toffoli => vec![Basis::Z; spec.num_qubits()],
        GateSpec::CnotXVariant => vec![Basis::X, Basis::Z],
    };
    if label.tags() != expected_tags.as_slice() {
        return Err(Error::InvalidLabel(format!(
            "gate {} acts on {:?}-tagged labels, got {:?}",
            spec.name(),
            expected_tags,
            label.tags()
        )));
    }
    let mut bits = label.bits().to_vec();
    if spec.controls().iter().all(|&c| bits[c] == 1) {
        let t = spec.target();
        bits[t] = 1 - bits[t];
    }
    Ok(BasisLabel::new(bits, expected_tags))
}
