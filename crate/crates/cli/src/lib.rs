//! Command-line front end: argument handling, file I/O and the three
//! emitters (plain report, DOT, JSON lines).

mod embed;
mod fibration;
pub mod numfmt;
mod record;

use std::path::{Path, PathBuf};

use brieskorn_core::{BrieskornError, CompileError, EmbedError};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use thiserror::Error;

pub use embed::embed_output;
pub use fibration::fibration_output;
pub use record::{parse_json_lines, Record};

/// Environment variable that takes precedence over `--seed`.
pub const SEED_ENV: &str = "BRIESKORN_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Brieskorn Lefschetz fibrations and relative Stein diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Report)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for the random morsification phases (BRIESKORN_SEED wins if set).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Critical locus, vanishing cycles and monodromy of z0^p + z1^q + Σ z_i^2.
    Fibration {
        p: u32,
        q: u32,
        /// Morsification coefficients: `n`, `n/d`, a decimal, or `re,im`.
        #[arg(long, num_args = 2, value_names = ["D0", "D1"], allow_hyphen_values = true)]
        delta: Option<Vec<String>>,
        /// Number of appended square terms.
        #[arg(long, default_value_t = 0)]
        suspend: u32,
        /// Reference regular value; must exceed every critical value modulus.
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Place the components of a grid diagram on a Milnor fibre page.
    Embed { grid: PathBuf },
    /// Compile a relative Stein diagram into a relative fibration.
    Compile { diagram: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Report,
    Dot,
    JsonLines,
}

/// One morsification coefficient: the float used for computation and, when
/// the input was a rational real, its exact value.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaValue {
    pub value: Complex64,
    pub exact: Option<BigRational>,
}

impl DeltaValue {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Argument(format!("cannot parse delta value {s:?}"));
        let part = |t: &str| -> Result<(f64, Option<BigRational>), CliError> {
            match numfmt::parse_rational(t) {
                Some(r) => Ok((brieskorn_core::brieskorn::rational_to_f64(&r), Some(r))),
                None => t.trim().parse::<f64>().map(|v| (v, None)).map_err(|_| bad()),
            }
        };
        match s.split_once(',') {
            Some((re, im)) => {
                let (re, exact_re) = part(re)?;
                let (im, exact_im) = part(im)?;
                let exact = match exact_im {
                    Some(z) if num_traits::Zero::is_zero(&z) => exact_re,
                    _ => None,
                };
                Ok(DeltaValue {
                    value: Complex64::new(re, im),
                    exact,
                })
            }
            None => {
                let (v, exact) = part(s)?;
                Ok(DeltaValue {
                    value: Complex64::new(v, 0.0),
                    exact,
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Job {
    Fibration {
        p: u32,
        q: u32,
        delta: Option<(DeltaValue, DeltaValue)>,
        suspensions: u32,
    },
    Embed(PathBuf),
    Compile(PathBuf),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub job: Job,
    pub output: Option<PathBuf>,
    pub epsilon: Option<f64>,
    pub format: Format,
    pub seed: u64,
}

impl RunConfig {
    /// Resolves the seed (environment first) and parses overrides.
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let seed = match std::env::var(SEED_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::Argument(format!("{SEED_ENV}={v:?} is not an unsigned integer")))?,
            Err(_) => cli.seed,
        };
        let mut epsilon = None;
        let job = match cli.command {
            Command::Fibration {
                p,
                q,
                delta,
                suspend,
                epsilon: eps,
            } => {
                epsilon = eps;
                let delta = match delta.as_deref() {
                    Some([a, b]) => Some((DeltaValue::parse(a)?, DeltaValue::parse(b)?)),
                    Some(_) => return Err(CliError::Argument("--delta takes two values".into())),
                    None => None,
                };
                Job::Fibration {
                    p,
                    q,
                    delta,
                    suspensions: suspend,
                }
            }
            Command::Embed { grid } => Job::Embed(grid),
            Command::Compile { diagram } => Job::Compile(diagram),
        };
        Ok(RunConfig {
            job,
            output: cli.output,
            epsilon,
            format: cli.format,
            seed,
        })
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Argument(String),
    #[error("{path}: {msg}")]
    Input { path: String, msg: String },
    #[error("cannot write {path}: {msg}")]
    Output { path: String, msg: String },
    #[error(transparent)]
    Brieskorn(#[from] BrieskornError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 input/parse, 3 framing violation, 4 not suspendible, 5 embedding
    /// or cycle failure, 1 anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Argument(_) | CliError::Input { .. } => 2,
            CliError::Brieskorn(BrieskornError::InvalidMap(_) | BrieskornError::InvalidEpsilon { .. }) => 2,
            CliError::Embed(EmbedError::GridParse { .. } | EmbedError::MalformedGrid(_)) => 2,
            CliError::Embed(_) => 5,
            CliError::Compile(e) => match e {
                CompileError::Parse { .. }
                | CompileError::Io { .. }
                | CompileError::Grid { .. }
                | CompileError::RoleMismatch(_) => 2,
                CompileError::FramingViolation { .. } => 3,
                CompileError::NotSuspendible { .. } => 4,
                CompileError::Embedding(_) | CompileError::Cycle(_) => 5,
                CompileError::Morsification(_) => 1,
            },
            CliError::Brieskorn(_) | CliError::Output { .. } | CliError::Json(_) => 1,
        }
    }
}

pub(crate) fn read_input(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

pub(crate) fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn compile_output(path: &Path, format: Format) -> Result<String, CliError> {
    let diagram = brieskorn_core::parse_diagram(path)?;
    let d = brieskorn_core::compile(&diagram)?;
    Ok(match format {
        Format::Report => format!(
            "diagram: {}\n{}",
            file_name(path),
            brieskorn_core::compiler::render_report(&d)
        ),
        Format::Dot => brieskorn_core::compiler::render_dot(&d),
        Format::JsonLines => record::to_json_lines(&[
            Record::Descriptor(Box::new(d.clone())),
            Record::Validation(brieskorn_core::validate_fibration(&d)),
        ])?,
    })
}

/// Produces the text a run would emit, without writing it anywhere.
pub fn render(cfg: &RunConfig) -> Result<String, CliError> {
    match &cfg.job {
        Job::Fibration {
            p,
            q,
            delta,
            suspensions,
        } => fibration_output(*p, *q, delta.as_ref(), *suspensions, cfg.epsilon, cfg.seed, cfg.format),
        Job::Embed(path) => embed_output(path, cfg.seed, cfg.format),
        Job::Compile(path) => compile_output(path, cfg.format),
    }
}

pub fn run(cfg: &RunConfig) -> Result<(), CliError> {
    let text = render(cfg)?;
    match &cfg.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Output {
            path: path.display().to_string(),
            msg: e.to_string(),
        }),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Output {
                path: "stdout".into(),
                msg: e.to_string(),
            })
        }
    }
}

pub(crate) fn write_matrix(out: &mut String, m: &brieskorn_core::IntMatrix, indent: &str) {
    use std::fmt::Write as _;
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(out, "{indent}[{}]", cells.join(" "));
    }
}
