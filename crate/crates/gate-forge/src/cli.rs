//! Command-line front end.
//!
//! ```text
//! gate-forge <analysis> [--gate cnot|toffoli|cnot-x] [--n INT] [--m INT]
//!            [--tau FLOAT] [--a2 FLOAT] [--eps FLOAT ...]
//!            [--format text|structured] [--out PATH]
//!            [--load-matrix PATH] [--dump-matrix PATH]
//! ```
//!
//! The analysis can be given as the positional argument or via
//! `--analyses a,b,c` (not both). Exit status: 0 when every verdict
//! passes, 1 when any analysis fails, 2 on usage errors or I/O failures.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use crate::gates::GateSpec;
use crate::report::{render_structured, render_text, run, Analysis, OutputFormat, RunConfig};
use crate::synthesis::SynthesisParams;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_ANALYSIS_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_EPSILONS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];

#[derive(Debug, Parser)]
#[command(
    name = "gate-forge",
    version,
    about = "Synthesize two- and three-qubit interaction Hamiltonians for the CNOT/Toffoli \
             gates and analyze their symmetry structure",
    after_help = "Analyses: synth, verify, jitter, symmetry, commutant.\n\
                  Defaults: --gate cnot --n 0 --m 0 --tau 1 --a2 1, analysis `verify`."
)]
struct Cli {
    /// Analyses to run, comma-separated (alternative to --analyses)
    #[arg(value_name = "ANALYSIS")]
    analysis: Option<String>,

    /// Target gate: cnot, toffoli or cnot-x
    #[arg(long, default_value = "cnot")]
    gate: String,

    /// Winding integer n (phase on the +x eigenspace)
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    n: i64,

    /// Winding integer m (phase on the −x eigenspace)
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    m: i64,

    /// Pulse duration tau > 0
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    tau: f64,

    /// Coupling a2 ≠ 0 (cancels in the Hamiltonian; kept to demonstrate it)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    a2: f64,

    /// Jitter epsilon, repeatable; each must lie in (0, tau/10]
    #[arg(long = "eps", value_name = "FLOAT", action = clap::ArgAction::Append, allow_negative_numbers = true)]
    eps: Vec<f64>,

    /// Analyses to run, comma-separated (alternative to the positional)
    #[arg(long, value_name = "LIST")]
    analyses: Option<String>,

    /// Report format: text or structured (JSON)
    #[arg(long, default_value = "text")]
    format: String,

    /// Write the report here instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Analyze a Hamiltonian read from the matrix text format instead of
    /// synthesizing one
    #[arg(long, value_name = "PATH")]
    load_matrix: Option<PathBuf>,

    /// Dump the analyzed Hamiltonian (and commutant basis elements as
    /// PATH.k) in the matrix text format
    #[arg(long, value_name = "PATH")]
    dump_matrix: Option<PathBuf>,
}

/// A parse failure, carrying the message and the process exit code.
#[derive(Debug)]
pub struct UsageError {
    pub message: String,
    /// 2 for genuine usage errors; 0 for --help/--version.
    pub exit_code: i32,
}

impl UsageError {
    fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            exit_code: EXIT_USAGE,
        }
    }
}

fn parse_analysis_list(list: &str) -> Result<Vec<Analysis>, UsageError> {
    let mut selected = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let analysis = Analysis::parse(token).map_err(|e| UsageError::new(e.to_string()))?;
        if !selected.contains(&analysis) {
            selected.push(analysis);
        }
    }
    if selected.is_empty() {
        return Err(UsageError::new("no analyses selected"));
    }
    Ok(selected)
}

/// Map argv onto a validated [`RunConfig`]. `argv[0]` is the program name.
pub fn parse_config(argv: &[String]) -> Result<RunConfig, UsageError> {
    let cli = Cli::try_parse_from(argv).map_err(|e| UsageError {
        message: e.render().to_string(),
        exit_code: match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
            _ => EXIT_USAGE,
        },
    })?;

    let gate: GateSpec = cli
        .gate
        .parse()
        .map_err(|e: crate::error::Error| UsageError::new(e.to_string()))?;

    let params = SynthesisParams::new(cli.n, cli.m, cli.tau, cli.a2)
        .map_err(|e| UsageError::new(e.to_string()))?;

    let analyses = match (&cli.analysis, &cli.analyses) {
        (Some(_), Some(_)) => {
            return Err(UsageError::new(
                "give the analysis either positionally or via --analyses, not both",
            ))
        }
        (Some(list), None) | (None, Some(list)) => parse_analysis_list(list)?,
        (None, None) => vec![Analysis::Verify],
    };

    let output_format = match cli.format.to_ascii_lowercase().as_str() {
        "text" => OutputFormat::Text,
        "structured" => OutputFormat::Structured,
        other => {
            return Err(UsageError::new(format!(
                "unknown format `{other}` (expected text or structured)"
            )))
        }
    };

    let jitter_epsilons = if cli.eps.is_empty() {
        DEFAULT_EPSILONS.to_vec()
    } else {
        cli.eps.clone()
    };

    let config = RunConfig {
        gate,
        params,
        jitter_epsilons,
        analyses,
        output_format,
        output_path: cli.out,
        load_matrix: cli.load_matrix,
        dump_matrix: cli.dump_matrix,
    };
    config
        .validate()
        .map_err(|e| UsageError::new(e.to_string()))?;
    Ok(config)
}

/// Full CLI entry point; returns the process exit code.
pub fn main_impl(argv: Vec<String>) -> i32 {
    let config = match parse_config(&argv) {
        Ok(config) => config,
        Err(usage) => {
            if usage.exit_code == 0 {
                print!("{}", usage.message);
            } else {
                eprintln!("{}", usage.message.trim_end());
            }
            return usage.exit_code;
        }
    };

    let report = match run(&config) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("gate-forge: {e}");
            return EXIT_USAGE;
        }
    };

    let rendered = match config.output_format {
        OutputFormat::Text => render_text(&report),
        OutputFormat::Structured => render_structured(&report),
    };
    match &config.output_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("gate-forge: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{rendered}"),
    }

    if report.overall.passed() {
        EXIT_PASS
    } else {
        EXIT_ANALYSIS_FAILED
    }
}
