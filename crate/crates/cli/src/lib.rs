//! Batch front-end: reads a JSON problem file, classifies the module and
//! optionally cross-checks it against the explicit oracle construction.

pub mod problem;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::problem::ProblemFile;
use crate::report::build_report;

pub const EXIT_INTEGRABLE: i32 = 0;
pub const EXIT_NOT_INTEGRABLE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("invalid problem file: {0}")]
    Schema(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] current_km::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Schema(_) => "Schema",
            CliError::Usage(_) => "Usage",
            CliError::Core(e) => e.kind(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "current-km", version, about = "Classify integrable highest-weight modules of current algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the module described by a problem file.
    Classify {
        file: PathBuf,
        /// Character depth (overrides options.depth).
        #[arg(long)]
        depth: Option<usize>,
        /// Spaces per indentation level; 0 prints a single line.
        #[arg(long, default_value_t = 2)]
        json_indent: usize,
    },
    /// Classify and cross-check against the explicit type A module.
    Verify {
        file: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        /// Nilpotency probe cap (overrides options.max_power).
        #[arg(long)]
        max_power: Option<u32>,
    },
}

/// Rendered output plus process exit code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

pub fn render<T: Serialize>(value: &T, indent: usize) -> String {
    let mut out = if indent == 0 {
        serde_json::to_vec(value).expect("report serializes")
    } else {
        let pad = vec![b' '; indent];
        let mut buf = Vec::new();
        let mut ser =
            serde_json::Serializer::with_formatter(&mut buf, serde_json::ser::PrettyFormatter::with_indent(&pad));
        value.serialize(&mut ser).expect("report serializes");
        buf
    };
    out.push(b'\n');
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

pub fn render_error(err: &CliError, indent: usize) -> String {
    render(&ErrorReport { error: ErrorBody { kind: err.kind(), message: err.to_string() } }, indent)
}

fn load(path: &Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), msg: e.to_string() })?;
    ProblemFile::from_json(&text)
}

fn run_inner(command: &Command) -> Result<Outcome, CliError> {
    let (file, depth, verify, indent) = match command {
        Command::Classify { file, depth, json_indent } => (file, *depth, None, *json_indent),
        Command::Verify { file, depth, max_power } => (file, *depth, Some(*max_power), 2),
    };
    let problem = load(file)?;
    let spec = problem.to_spec()?;
    let depth = depth.unwrap_or(problem.options.depth);

    let verify = match verify {
        Some(cap) => Some(cap.unwrap_or(problem.options.max_power)),
        None if problem.options.verify => Some(problem.options.max_power),
        None => None,
    };
    if verify.is_some() {
        if let Some(rank) = problem.options.oracle_rank {
            if rank != spec.cartan().rank() {
                return Err(CliError::Schema(format!(
                    "oracle_rank {rank} does not match the Cartan matrix rank {}",
                    spec.cartan().rank()
                )));
            }
        }
    }

    let report = build_report(&problem, &spec, depth, verify)?;
    let code = match (&report.oracle, matches!(command, Command::Verify { .. })) {
        (Some(o), _) if !o.confirmed => EXIT_MISMATCH,
        (Some(_), true) => EXIT_INTEGRABLE,
        _ if report.verdict.status == "Integrable" => EXIT_INTEGRABLE,
        _ => EXIT_NOT_INTEGRABLE,
    };
    Ok(Outcome { output: render(&report, indent), code })
}

/// Runs one command. Errors are rendered as `{"error": {"kind", "message"}}` with exit code 3.
pub fn run(command: &Command) -> Outcome {
    match run_inner(command) {
        Ok(outcome) => outcome,
        Err(err) => {
            let indent = match command {
                Command::Classify { json_indent, .. } => *json_indent,
                Command::Verify { .. } => 2,
            };
            Outcome { output: render_error(&err, indent), code: EXIT_ERROR }
        }
    }
}
