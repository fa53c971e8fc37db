//! End-to-end tests of the `gate-forge` binary: exit-status contract,
//! report round-trip and determinism, matrix dump/load.

use std::path::PathBuf;
use std::process::{Command, Output};

use gate_forge::report::Report;
use gate_forge::textfmt::{matrix_to_text, read_matrix_file};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gate-forge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).to_string()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gate-forge-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn default_invocation_verifies_and_passes() {
    let output = run(&[]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("[verify]"), "{text}");
    assert!(text.contains("PASS"), "{text}");
}

#[test]
fn verify_documented_invocation() {
    let output = run(&["verify", "--gate", "cnot", "--n", "0", "--m", "0", "--tau", "1"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn symmetry_reports_no_rotation_symmetry() {
    let output = run(&["symmetry", "--gate", "cnot"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("NO GLOBAL ROTATION SYMMETRY"));
}

#[test]
fn x_variant_symmetry_passes() {
    let output = run(&["--gate", "cnot-x", "--analyses", "symmetry"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("ROTATION SYMMETRY ABOUT x"));
}

#[test]
fn zero_tau_is_usage_error() {
    let output = run(&["verify", "--gate", "cnot", "--tau", "0"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(!stderr(&output).is_empty());
}

#[test]
fn unknown_gate_is_usage_error() {
    let output = run(&["verify", "--gate", "bell"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("unknown gate"));
}

#[test]
fn unknown_flag_is_usage_error() {
    let output = run(&["--no-such-flag"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn toffoli_symmetry_is_usage_error() {
    let output = run(&["symmetry", "--gate", "toffoli"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("two-qubit"));
}

#[test]
fn structured_report_round_trips_and_is_deterministic() {
    let args = ["synth,verify,jitter,symmetry,commutant", "--format", "structured"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);

    let report: Report = serde_json::from_str(&text).expect("valid JSON report");
    assert_eq!(gate_forge::report::render_structured(&report), text);

    let second = run(&args);
    assert_eq!(stdout(&second), text, "identical config must give identical bytes");
}

#[test]
fn report_writes_to_out_path() {
    let dir = temp_dir("out");
    let path = dir.join("report.json");
    let output = run(&[
        "verify",
        "--format",
        "structured",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).is_empty());
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.config.gate, "cnot");
}

#[test]
fn unwritable_out_path_exits_2() {
    let output = run(&["verify", "--out", "/nonexistent-dir/report.txt"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("cannot write"));
}

#[test]
fn dump_then_load_round_trips_through_files() {
    let dir = temp_dir("dump");
    let dumped = dir.join("hamiltonian.mat");

    let output = run(&["synth", "--n", "1", "--m", "-1", "--dump-matrix", dumped.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));

    let loaded = read_matrix_file(&dumped).unwrap();
    let p = gate_forge::synthesis::SynthesisParams::new(1, -1, 1.0, 1.0).unwrap();
    let expected = gate_forge::synthesis::build_cnot_hamiltonian(&p);
    assert_eq!(matrix_to_text(&loaded), matrix_to_text(&expected));

    // feeding the dumped matrix back reproduces an exact verification
    let verify = run(&["verify", "--load-matrix", dumped.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn loaded_wrong_hamiltonian_fails_with_exit_1() {
    let dir = temp_dir("wrong");
    let path = dir.join("zero.mat");
    std::fs::write(&path, matrix_to_text(&gate_forge::matrix::ComplexMatrix::zeros(4))).unwrap();

    let output = run(&["verify", "--load-matrix", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("FAIL"));
}

#[test]
fn loaded_matrix_with_wrong_dimension_exits_2() {
    let dir = temp_dir("dim");
    let path = dir.join("small.mat");
    std::fs::write(&path, matrix_to_text(&gate_forge::matrix::ComplexMatrix::zeros(2))).unwrap();

    let output = run(&["verify", "--load-matrix", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn missing_matrix_file_exits_2() {
    let output = run(&["verify", "--load-matrix", "/nonexistent/h.mat"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn commutant_dump_writes_basis_elements() {
    let dir = temp_dir("commutant");
    let stem = dir.join("basis.mat");
    let output = run(&[
        "commutant",
        "--n",
        "1",
        "--dump-matrix",
        stem.to_str().unwrap(),
        "--format",
        "structured",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let report: Report = serde_json::from_str(&stdout(&output)).unwrap();
    let dimension = report.commutant.unwrap().dimension;
    assert_eq!(dimension, 6);
    for k in 0..dimension {
        let element = read_matrix_file(format!("{}.{k}", stem.display())).unwrap();
        assert_eq!(element.dim(), 4);
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
