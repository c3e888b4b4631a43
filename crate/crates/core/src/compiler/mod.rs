//! Relative Stein diagrams and their compilation into relative Lefschetz
//! fibration descriptors.

mod compile;
mod diagram;
mod report;
mod validate;

use thiserror::Error;

use crate::brieskorn::BrieskornError;
use crate::cycle_graph::CycleError;
use crate::legendrian::EmbedError;

pub use compile::{compile, HandleRecord, PageDescription, RelativeFibrationDescriptor};
pub use diagram::{parse_diagram, parse_diagram_with, ComponentRef, DashedEntry, RelativeSteinDiagram, DIAGRAM_HEADER};
pub use report::{class_string, render_dot, render_report};
pub use validate::{validate_fibration, Check, ValidationReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CompileError {
    #[error("diagram parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("grid file {file}: {source}")]
    Grid { file: String, source: EmbedError },
    #[error("dashed component {component} of {grid_file} has framing {framing}, but tb - 1 = {}", tb - 1)]
    FramingViolation {
        component: usize,
        grid_file: String,
        framing: i64,
        tb: i64,
    },
    #[error("role mismatch: {0}")]
    RoleMismatch(String),
    #[error("solid component {component} of {grid_file} is not suspendible: {reason}")]
    NotSuspendible {
        component: usize,
        grid_file: String,
        reason: String,
    },
    #[error("embedding failed: {0}")]
    Embedding(#[from] EmbedError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Morsification(#[from] BrieskornError),
}
