use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::spec::ResolvedState;
use super::CliError;
use crate::spectral::ComplexMatrix;
use crate::states::{density_from_matrix, PureState};

/// Values below this magnitude print as `0` in reports.
pub const PRINT_ZERO_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Density,
    Pure,
}

/// On-disk state: `{"kind": "density"|"pure", "dim": n, "entries": [[re, im], ...]}`.
/// Density entries are row-major (`dim * dim` pairs), pure entries are the amplitude vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateDocument {
    pub kind: StateKind,
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
}

pub fn parse_state_file(bytes: &[u8]) -> Result<ResolvedState, CliError> {
    let doc: StateDocument =
        serde_json::from_slice(bytes).map_err(|e| CliError::Parse(e.to_string()))?;
    if doc.dim == 0 {
        return Err(CliError::Parse("field 'dim': must be positive".into()));
    }
    let expected = match doc.kind {
        StateKind::Density => doc.dim * doc.dim,
        StateKind::Pure => doc.dim,
    };
    if doc.entries.len() != expected {
        return Err(CliError::Parse(format!(
            "field 'entries': expected {expected} [re, im] pairs for dim {}, got {}",
            doc.dim,
            doc.entries.len()
        )));
    }
    let entries: Vec<Complex64> = doc.entries.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
    let invalid = |e: crate::Error| CliError::Validation(format!("field 'entries': {}: {e}", e.kind_name()));
    match doc.kind {
        StateKind::Density => {
            let m = ComplexMatrix::new(doc.dim, entries).map_err(invalid)?;
            Ok(ResolvedState::Density(density_from_matrix(m).map_err(invalid)?))
        }
        StateKind::Pure => Ok(ResolvedState::Pure(PureState::new(entries).map_err(invalid)?)),
    }
}

/// Serializes a state with full `f64` precision, so parsing reproduces it exactly.
pub fn write_state_document(state: &ResolvedState) -> String {
    let (kind, dim, entries): (StateKind, usize, &[Complex64]) = match state {
        ResolvedState::Density(rho) => (StateKind::Density, rho.dim(), rho.matrix().entries()),
        ResolvedState::Pure(psi) => (StateKind::Pure, psi.dim(), psi.amplitudes()),
    };
    let doc = StateDocument {
        kind,
        dim,
        entries: entries.iter().map(|z| [z.re, z.im]).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("state documents serialize");
    out.push('\n');
    out
}

/// Rounds to 12 significant digits; magnitudes below [`PRINT_ZERO_TOL`] become 0.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < PRINT_ZERO_TOL {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Text form of [`round_sig`]: `0`, `1`, `0.326708506474`, or `inf`.
pub fn format_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{}", round_sig(x))
}
