//! Command-line front end: state specs, the JSON state file format, sweep
//! grids, number formatting and the `measure` / `sweep` / `report` /
//! `validate` commands. The binary in `main.rs` only parses flags and writes
//! the documents produced here.

mod commands;
mod format;
mod grid;
mod spec;

pub use commands::{
    cmd_measure, cmd_purification_report, cmd_sweep, cmd_validate, MeasureName, OutputFormat,
};
pub use format::{format_sig, parse_state_file, round_sig, write_state_document, StateDocument, StateKind};
pub use grid::{parse_range, SweepGrid, DEFAULT_F_GRID, DEFAULT_Q_GRID};
pub use spec::{NamedState, ResolvedState, StateSpec};

use thiserror::Error;

/// CLI failure, mapped onto process exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    /// Malformed input document or flag value.
    #[error("parse error: {0}")]
    Parse(String),
    /// Input parsed but fails a state invariant.
    #[error("validation error: {0}")]
    Validation(String),
    /// Dimension mismatch, missing parameter or other unmet precondition.
    #[error("precondition error: {0}")]
    Precondition(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Validation(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        use crate::Error::*;
        match e {
            NotHermitian(_) | NotPositive(_) | TraceNotOne(_) | NotNormalized(_) | Shape(_)
            | NonFinite => CliError::Validation(format!("{}: {e}", e.kind_name())),
            _ => CliError::Precondition(format!("{}: {e}", e.kind_name())),
        }
    }
}
