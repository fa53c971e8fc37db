//! Analysis orchestration and report emission.
//!
//! A [`RunConfig`] selects a gate, synthesis parameters and a set of
//! analyses; [`run`] executes them in a fixed order (synth → verify →
//! jitter → symmetry → commutant) and aggregates a [`Report`] whose
//! verdicts are deterministic functions of the numeric results and the
//! tolerances in [`crate::tolerances`] (echoed into every report). The
//! structured format is JSON with the field names documented in the README;
//! it round-trips through serde unchanged.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gates::{gate_matrix, pauli, Axis, GateSpec};
use crate::matrix::{phase_distance, ComplexMatrix};
use crate::symmetry::{
    conserved_operator_check, rotation_generator_search, sphere_sampling_minimum,
    swap_symmetry_check,
};
use crate::synthesis::{block_exponential, evolve, hamiltonian_for, jitter_reports, SynthesisParams};
use crate::textfmt::{read_matrix_file, write_matrix_file};
use crate::{eigen, symmetry, tolerances};

/// Analyses the tool can run, in their fixed execution order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Analysis {
    Synth,
    Verify,
    Jitter,
    Symmetry,
    Commutant,
}

impl Analysis {
    pub const ALL: [Analysis; 5] = [
        Analysis::Synth,
        Analysis::Verify,
        Analysis::Jitter,
        Analysis::Symmetry,
        Analysis::Commutant,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Analysis::Synth => "synth",
            Analysis::Verify => "verify",
            Analysis::Jitter => "jitter",
            Analysis::Symmetry => "symmetry",
            Analysis::Commutant => "commutant",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "synth" => Ok(Analysis::Synth),
            "verify" => Ok(Analysis::Verify),
            "jitter" => Ok(Analysis::Jitter),
            "symmetry" => Ok(Analysis::Symmetry),
            "commutant" => Ok(Analysis::Commutant),
            other => Err(Error::InvalidParameter(format!(
                "unknown analysis `{other}` (expected synth, verify, jitter, symmetry or commutant)"
            ))),
        }
    }
}

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

impl OutputFormat {
    pub fn name(&self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Structured => "structured",
        }
    }
}

/// Fully validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub gate: GateSpec,
    pub params: SynthesisParams,
    pub jitter_epsilons: Vec<f64>,
    /// Requested analyses; executed in `Analysis::ALL` order.
    pub analyses: Vec<Analysis>,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    /// Analyze this matrix (text format) instead of the synthesized one.
    pub load_matrix: Option<PathBuf>,
    /// Dump the analyzed Hamiltonian (and any commutant basis) here.
    pub dump_matrix: Option<PathBuf>,
}

impl RunConfig {
    /// Check the cross-field invariants that individual flag parsers cannot
    /// see.
    pub fn validate(&self) -> Result<()> {
        if self.analyses.is_empty() {
            return Err(Error::InvalidParameter("no analyses selected".into()));
        }
        let tau = self.params.tau();
        for &eps in &self.jitter_epsilons {
            if !eps.is_finite() || eps <= 0.0 || eps > tau / 10.0 {
                return Err(Error::InvalidParameter(format!(
                    "jitter epsilon {eps} outside (0, tau/10] = (0, {}]",
                    tau / 10.0
                )));
            }
        }
        if self.analyses.contains(&Analysis::Symmetry) && self.gate == GateSpec::Toffoli {
            return Err(Error::InvalidParameter(
                "the rotation-symmetry analysis is defined for two-qubit gates; \
                 gate `toffoli` is not supported here"
                    .into(),
            ));
        }
        Ok(())
    }
}

/// Pass/fail verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

/// Echo of the configuration that produced a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub gate: String,
    pub n: i64,
    pub m: i64,
    pub tau: f64,
    pub a2: f64,
    pub epsilons: Vec<f64>,
    pub analyses: Vec<String>,
    pub format: String,
    pub out: Option<String>,
    pub load_matrix: Option<String>,
    pub dump_matrix: Option<String>,
}

/// The named tolerances every verdict was judged against.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToleranceEcho {
    pub gate_equality: f64,
    pub block_vs_dense: f64,
    pub rotation_symmetry: f64,
    pub asymmetry_floor: f64,
    pub axis_alignment: f64,
    pub gate_symmetry_commutator: f64,
    pub commutant_residual: f64,
    pub commutant_orthonormality: f64,
    pub span_projection_defect: f64,
    pub conserved_operator_residual: f64,
    pub jitter_bound_slack: f64,
    pub sphere_sampling_gap: f64,
}

impl ToleranceEcho {
    fn current() -> Self {
        Self {
            gate_equality: tolerances::GATE_EQUALITY,
            block_vs_dense: tolerances::BLOCK_VS_DENSE,
            rotation_symmetry: tolerances::ROTATION_SYMMETRY,
            asymmetry_floor: tolerances::ASYMMETRY_FLOOR,
            axis_alignment: tolerances::AXIS_ALIGNMENT,
            gate_symmetry_commutator: tolerances::GATE_SYMMETRY_COMMUTATOR,
            commutant_residual: tolerances::COMMUTANT_RESIDUAL,
            commutant_orthonormality: tolerances::COMMUTANT_ORTHONORMALITY,
            span_projection_defect: tolerances::SPAN_PROJECTION_DEFECT,
            conserved_operator_residual: tolerances::CONSERVED_OPERATOR_RESIDUAL,
            jitter_bound_slack: tolerances::JITTER_BOUND_SLACK,
            sphere_sampling_gap: tolerances::SPHERE_SAMPLING_GAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthSection {
    pub dim: usize,
    pub hermitian: bool,
    pub frobenius_norm: f64,
    pub eigenvalues: Vec<f64>,
    /// Distance between the block-split and dense exponentials; present
    /// only for synthesized CNOT runs.
    pub block_dense_agreement: Option<f64>,
    pub dumped_to: Option<String>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySection {
    pub frobenius_residual: f64,
    pub phase_invariant_residual: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JitterRow {
    pub epsilon: f64,
    pub sign: String,
    pub frobenius_distance: f64,
    pub phase_distance: f64,
    pub fidelity: f64,
    pub first_order_bound: f64,
    pub within_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JitterSection {
    pub tau: f64,
    pub rows: Vec<JitterRow>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetrySection {
    pub min_residual: f64,
    pub best_axis: [f64; 3],
    pub singular_values: [f64; 3],
    pub sampled_minimum: f64,
    pub sampling_gap: f64,
    pub swap_residual: f64,
    /// `‖[σ₁ₓ+σ₂ₓ, U]‖_F` for the gate unitary; only reported for the
    /// x-basis variant.
    pub gate_commutator_residual: Option<f64>,
    /// What the verdict asserts: `no-global-rotation-symmetry`,
    /// `x-axis-rotation-symmetry` or `informational`.
    pub expectation: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConservedSpanSection {
    pub operators: Vec<String>,
    pub commute_residuals: Vec<f64>,
    pub projection_defects: Vec<f64>,
    pub contained: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutantSection {
    pub dimension: usize,
    pub max_residual: f64,
    pub orthonormality_defect: f64,
    pub conserved_span: Option<ConservedSpanSection>,
    pub verdict: Verdict,
}

/// Complete analysis report. Serializes to the frozen JSON schema; equal
/// configs produce byte-identical structured reports (modulo `version`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub tolerances: ToleranceEcho,
    pub synth: Option<SynthSection>,
    pub verify: Option<VerifySection>,
    pub jitter: Option<JitterSection>,
    pub symmetry: Option<SymmetrySection>,
    pub commutant: Option<CommutantSection>,
    pub overall: Verdict,
}

fn config_echo(config: &RunConfig) -> ConfigEcho {
    let ordered: Vec<String> = Analysis::ALL
        .iter()
        .filter(|a| config.analyses.contains(a))
        .map(|a| a.name().to_string())
        .collect();
    let path_string = |p: &Option<PathBuf>| p.as_ref().map(|p| p.display().to_string());
    ConfigEcho {
        gate: config.gate.name().to_string(),
        n: config.params.n(),
        m: config.params.m(),
        tau: config.params.tau(),
        a2: config.params.a2(),
        epsilons: config.jitter_epsilons.clone(),
        analyses: ordered,
        format: config.output_format.name().to_string(),
        out: path_string(&config.output_path),
        load_matrix: path_string(&config.load_matrix),
        dump_matrix: path_string(&config.dump_matrix),
    }
}

/// Execute the requested analyses and aggregate the report.
///
/// Errors (bad matrix files, dimension mismatches, write failures) abort
/// the run; analysis *failures* do not — they mark the report `fail`.
pub fn run(config: &RunConfig) -> Result<Report> {
    config.validate()?;

    let loaded = config.load_matrix.is_some();
    let hamiltonian = match &config.load_matrix {
        Some(path) => {
            let m = read_matrix_file(path)?;
            if m.dim() != config.gate.dim() {
                return Err(Error::DimensionMismatch {
                    left: m.dim(),
                    right: config.gate.dim(),
                });
            }
            m
        }
        None => hamiltonian_for(config.gate, &config.params),
    };

    let wants = |a: Analysis| config.analyses.contains(&a);
    let mut report = Report {
        tool: "gate-forge".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config_echo(config),
        tolerances: ToleranceEcho::current(),
        synth: None,
        verify: None,
        jitter: None,
        symmetry: None,
        commutant: None,
        overall: Verdict::Pass,
    };

    if wants(Analysis::Synth) {
        report.synth = Some(run_synth(config, &hamiltonian, loaded)?);
    }
    if wants(Analysis::Verify) {
        report.verify = Some(run_verify(config, &hamiltonian)?);
    }
    if wants(Analysis::Jitter) {
        report.jitter = Some(run_jitter(config, &hamiltonian)?);
    }
    if wants(Analysis::Symmetry) {
        report.symmetry = Some(run_symmetry(config, &hamiltonian, loaded)?);
    }
    if wants(Analysis::Commutant) {
        report.commutant = Some(run_commutant(config, &hamiltonian, loaded)?);
    }

    let verdicts = [
        report.synth.as_ref().map(|s| s.verdict),
        report.verify.as_ref().map(|s| s.verdict),
        report.jitter.as_ref().map(|s| s.verdict),
        report.symmetry.as_ref().map(|s| s.verdict),
        report.commutant.as_ref().map(|s| s.verdict),
    ];
    let all_pass = verdicts.iter().flatten().all(|v| v.passed());
    report.overall = Verdict::from_bool(all_pass);
    Ok(report)
}

fn run_synth(config: &RunConfig, h: &ComplexMatrix, loaded: bool) -> Result<SynthSection> {
    let hermitian = h.is_hermitian(tolerances::HERMITICITY_CHECK);
    let eigenvalues = if hermitian {
        eigen::hermitian_eig(h)?.eigenvalues
    } else {
        Vec::new()
    };
    let block_dense_agreement = if !loaded && config.gate == GateSpec::Cnot {
        let block = block_exponential(&config.params);
        let dense = evolve(h, config.params.tau(), config.params.tau())?;
        Some(block.frobenius_distance(&dense))
    } else {
        None
    };
    let dumped_to = match &config.dump_matrix {
        Some(path) => {
            write_matrix_file(path, h)?;
            Some(path.display().to_string())
        }
        None => None,
    };
    let agreement_ok = block_dense_agreement
        .map(|d| d <= tolerances::BLOCK_VS_DENSE)
        .unwrap_or(true);
    Ok(SynthSection {
        dim: h.dim(),
        hermitian,
        frobenius_norm: h.frobenius_norm(),
        eigenvalues,
        block_dense_agreement,
        dumped_to,
        verdict: Verdict::from_bool(hermitian && agreement_ok),
    })
}

fn run_verify(config: &RunConfig, h: &ComplexMatrix) -> Result<VerifySection> {
    let tau = config.params.tau();
    let u = evolve(h, tau, tau)?;
    let target = gate_matrix(config.gate);
    let distances = phase_distance(&u, &target)?;
    Ok(VerifySection {
        frobenius_residual: distances.frobenius,
        phase_invariant_residual: distances.phase_invariant,
        verdict: Verdict::from_bool(distances.frobenius <= tolerances::GATE_EQUALITY),
    })
}

fn run_jitter(config: &RunConfig, h: &ComplexMatrix) -> Result<JitterSection> {
    let tau = config.params.tau();
    let mut rows = Vec::new();
    for &eps in &config.jitter_epsilons {
        let pair = jitter_reports(h, config.gate, tau, eps)?;
        for r in pair {
            rows.push(JitterRow {
                epsilon: r.epsilon,
                sign: r.sign.symbol().to_string(),
                frobenius_distance: r.frobenius_distance,
                phase_distance: r.phase_distance,
                fidelity: r.fidelity,
                first_order_bound: r.first_order_bound,
                within_bound: r.frobenius_distance
                    <= r.first_order_bound + tolerances::JITTER_BOUND_SLACK,
            });
        }
    }
    let verdict = Verdict::from_bool(rows.iter().all(|r| r.within_bound));
    Ok(JitterSection { tau, rows, verdict })
}

fn run_symmetry(config: &RunConfig, h: &ComplexMatrix, loaded: bool) -> Result<SymmetrySection> {
    let search = rotation_generator_search(h)?;
    let (sampled_minimum, _) = sphere_sampling_minimum(h, tolerances::SPHERE_SAMPLE_POINTS)?;
    let sampling_gap = sampled_minimum - search.min_residual;
    let sampling_consistent =
        search.min_residual <= sampled_minimum + 1e-12 && sampling_gap <= tolerances::SPHERE_SAMPLING_GAP;

    let gate_unitary = gate_matrix(config.gate);
    let swap_residual = swap_symmetry_check(&gate_unitary)?;

    let gate_commutator_residual = if config.gate == GateSpec::CnotXVariant {
        let identity2 = ComplexMatrix::identity(2);
        let sx_total = pauli(Axis::X)
            .tensor(&identity2)
            .add(&identity2.tensor(&pauli(Axis::X)));
        Some(sx_total.commutator(&gate_unitary)?.frobenius_norm())
    } else {
        None
    };

    let (expectation, verdict_ok) = if loaded {
        ("informational".to_string(), sampling_consistent)
    } else {
        match config.gate {
            GateSpec::Cnot => (
                "no-global-rotation-symmetry".to_string(),
                search.min_residual > tolerances::ASYMMETRY_FLOOR && sampling_consistent,
            ),
            GateSpec::CnotXVariant => {
                let axis_aligned = 1.0 - search.best_axis[0].abs() <= tolerances::AXIS_ALIGNMENT;
                let gate_symmetric = gate_commutator_residual
                    .map(|r| r <= tolerances::GATE_SYMMETRY_COMMUTATOR)
                    .unwrap_or(false);
                (
                    "x-axis-rotation-symmetry".to_string(),
                    search.min_residual <= tolerances::ROTATION_SYMMETRY
                        && axis_aligned
                        && gate_symmetric
                        && sampling_consistent,
                )
            }
            GateSpec::Toffoli => unreachable!("rejected by RunConfig::validate"),
        }
    };

    Ok(SymmetrySection {
        min_residual: search.min_residual,
        best_axis: search.best_axis,
        singular_values: search.singular_values,
        sampled_minimum,
        sampling_gap,
        swap_residual,
        gate_commutator_residual,
        expectation,
        verdict: Verdict::from_bool(verdict_ok),
    })
}

fn run_commutant(config: &RunConfig, h: &ComplexMatrix, loaded: bool) -> Result<CommutantSection> {
    let result = symmetry::commutant_default(h)?;
    let max_residual = result.residuals.iter().cloned().fold(0.0, f64::max);

    let mut gram_defect: f64 = 0.0;
    for (i, bi) in result.basis.iter().enumerate() {
        for (j, bj) in result.basis.iter().enumerate() {
            let inner = bi.frobenius_inner(bj);
            let expected = if i == j { 1.0 } else { 0.0 };
            gram_defect = gram_defect.hypot(inner.re - expected).hypot(inner.im);
        }
    }

    if let Some(path) = &config.dump_matrix {
        for (k, b) in result.basis.iter().enumerate() {
            let element_path = format!("{}.{k}", path.display());
            write_matrix_file(element_path, b)?;
        }
    }

    let conserved_span = if h.dim() == 4 && config.gate == GateSpec::Cnot {
        let check = conserved_operator_check(h)?;
        Some(ConservedSpanSection {
            operators: check.operator_names.iter().map(|s| s.to_string()).collect(),
            commute_residuals: check.commute_residuals.to_vec(),
            projection_defects: check.projection_defects.to_vec(),
            contained: check.passed,
        })
    } else {
        None
    };

    let scale = h.frobenius_norm().max(f64::MIN_POSITIVE);
    let residuals_ok = max_residual <= tolerances::COMMUTANT_RESIDUAL * scale;
    let orthonormal_ok = gram_defect <= tolerances::COMMUTANT_ORTHONORMALITY;
    // the containment claim only binds for synthesized CNOT Hamiltonians
    let span_ok = if loaded {
        true
    } else {
        conserved_span.as_ref().map(|c| c.contained).unwrap_or(true)
    };

    Ok(CommutantSection {
        dimension: result.dimension,
        max_residual,
        orthonormality_defect: gram_defect,
        conserved_span,
        verdict: Verdict::from_bool(residuals_ok && orthonormal_ok && span_ok),
    })
}

/// Structured (JSON) serialization of a report, with trailing newline.
pub fn render_structured(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

/// Human-readable serialization of a report.
pub fn render_text(report: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let c = &report.config;
    writeln!(out, "{} {}", report.tool, report.version).unwrap();
    writeln!(
        out,
        "gate: {}   params: n={} m={} tau={} a2={}{}",
        c.gate,
        c.n,
        c.m,
        c.tau,
        c.a2,
        c.load_matrix
            .as_ref()
            .map(|p| format!("   matrix: {p}"))
            .unwrap_or_default()
    )
    .unwrap();

    if let Some(s) = &report.synth {
        writeln!(
            out,
            "[synth]     {}  dim={} hermitian={} ‖H‖_F={:.12}",
            s.verdict.label(),
            s.dim,
            s.hermitian,
            s.frobenius_norm
        )
        .unwrap();
        writeln!(out, "            eigenvalues: {:?}", s.eigenvalues).unwrap();
        if let Some(d) = s.block_dense_agreement {
            writeln!(
                out,
                "            block-vs-dense agreement: {:.3e} (tol {:.0e})",
                d,
                report.tolerances.block_vs_dense
            )
            .unwrap();
        }
        if let Some(path) = &s.dumped_to {
            writeln!(out, "            matrix written to {path}").unwrap();
        }
    }
    if let Some(v) = &report.verify {
        writeln!(
            out,
            "[verify]    {}  frobenius residual {:.3e} ≤ {:.0e} (phase-invariant {:.3e})",
            v.verdict.label(),
            v.frobenius_residual,
            report.tolerances.gate_equality,
            v.phase_invariant_residual
        )
        .unwrap();
    }
    if let Some(j) = &report.jitter {
        writeln!(out, "[jitter]    {}  tau={}", j.verdict.label(), j.tau).unwrap();
        for r in &j.rows {
            writeln!(
                out,
                "            eps={:<9} {}  d_F={:.6e}  d_phase={:.6e}  fidelity={:.12}  bound={:.6e}{}",
                r.epsilon,
                r.sign,
                r.frobenius_distance,
                r.phase_distance,
                r.fidelity,
                r.first_order_bound,
                if r.within_bound { "" } else { "  EXCEEDED" }
            )
            .unwrap();
        }
    }
    if let Some(s) = &report.symmetry {
        let headline = match s.expectation.as_str() {
            "no-global-rotation-symmetry" => "NO GLOBAL ROTATION SYMMETRY",
            "x-axis-rotation-symmetry" => "ROTATION SYMMETRY ABOUT x",
            _ => "SYMMETRY SCAN",
        };
        writeln!(
            out,
            "[symmetry]  {}  {}  min residual {:.6e}",
            s.verdict.label(),
            headline,
            s.min_residual
        )
        .unwrap();
        writeln!(
            out,
            "            best axis ({:+.6}, {:+.6}, {:+.6})  singular values {:.3e} {:.3e} {:.3e}",
            s.best_axis[0],
            s.best_axis[1],
            s.best_axis[2],
            s.singular_values[0],
            s.singular_values[1],
            s.singular_values[2]
        )
        .unwrap();
        writeln!(
            out,
            "            sphere sampling minimum {:.6e} (gap {:+.3e})  swap residual {:.6}",
            s.sampled_minimum, s.sampling_gap, s.swap_residual
        )
        .unwrap();
        if let Some(r) = s.gate_commutator_residual {
            writeln!(out, "            gate-level [σ₁ₓ+σ₂ₓ, U] residual {r:.3e}").unwrap();
        }
    }
    if let Some(cm) = &report.commutant {
        writeln!(
            out,
            "[commutant] {}  dimension {}  max residual {:.3e}  orthonormality defect {:.3e}",
            cm.verdict.label(),
            cm.dimension,
            cm.max_residual,
            cm.orthonormality_defect
        )
        .unwrap();
        if let Some(span) = &cm.conserved_span {
            writeln!(
                out,
                "            conserved-operator span contained: {}",
                span.contained
            )
            .unwrap();
            for (i, name) in span.operators.iter().enumerate() {
                writeln!(
                    out,
                    "              {name}: commute residual {:.3e}, projection defect {:.3e}",
                    span.commute_residuals[i], span.projection_defects[i]
                )
                .unwrap();
            }
        }
    }

    writeln!(out, "overall: {}", report.overall.label()).unwrap();
    let t = &report.tolerances;
    writeln!(
        out,
        "tolerances: gate_equality={:.0e} block_vs_dense={:.0e} rotation_symmetry={:.0e} \
         asymmetry_floor={} commutant_residual={:.0e} span_projection_defect={:.0e}",
        t.gate_equality,
        t.block_vs_dense,
        t.rotation_symmetry,
        t.asymmetry_floor,
        t.commutant_residual,
        t.span_projection_defect
    )
    .unwrap();
    out
}
