use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::format::{format_sig, round_sig};
use super::grid::SweepGrid;
use super::spec::{ResolvedState, StateSpec};
use super::CliError;
use crate::measures::{self, EntropicIndex};
use crate::states::{bell_state, projector, werner_state, BellState, PureState, WernerParameter};

/// Pure references closer than this (in squared Fubini-Study distance) to the singlet
/// are accepted by `sweep`.
const SINGLET_MATCH_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureName {
    Fidelity,
    BuresSq,
    KlDivergence,
    QDivergence,
    QDivergenceEigensum,
    QDivergenceJackson,
    QDivergencePureRef,
    FubiniStudySq,
    VonNeumannEntropy,
    TsallisEntropy,
}

impl MeasureName {
    pub const ALL: [MeasureName; 10] = [
        MeasureName::Fidelity,
        MeasureName::BuresSq,
        MeasureName::KlDivergence,
        MeasureName::QDivergence,
        MeasureName::QDivergenceEigensum,
        MeasureName::QDivergenceJackson,
        MeasureName::QDivergencePureRef,
        MeasureName::FubiniStudySq,
        MeasureName::VonNeumannEntropy,
        MeasureName::TsallisEntropy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MeasureName::Fidelity => "fidelity",
            MeasureName::BuresSq => "bures-sq",
            MeasureName::KlDivergence => "kl-divergence",
            MeasureName::QDivergence => "q-divergence",
            MeasureName::QDivergenceEigensum => "q-divergence-eigensum",
            MeasureName::QDivergenceJackson => "q-divergence-jackson",
            MeasureName::QDivergencePureRef => "q-divergence-pure-ref",
            MeasureName::FubiniStudySq => "fubini-study-sq",
            MeasureName::VonNeumannEntropy => "von-neumann-entropy",
            MeasureName::TsallisEntropy => "tsallis-entropy",
        }
    }

    fn needs_q(self) -> bool {
        matches!(
            self,
            MeasureName::QDivergence
                | MeasureName::QDivergenceEigensum
                | MeasureName::QDivergenceJackson
                | MeasureName::QDivergencePureRef
                | MeasureName::TsallisEntropy
        )
    }

    fn needs_reference(self) -> bool {
        !matches!(self, MeasureName::VonNeumannEntropy | MeasureName::TsallisEntropy)
    }
}

impl fmt::Display for MeasureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MeasureName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        MeasureName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = MeasureName::ALL.iter().map(|m| m.as_str()).collect();
                format!("unknown measure '{s}' (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
enum Value {
    Number(f64),
    Token(&'static str),
}

impl Value {
    fn new(x: f64) -> Self {
        if x.is_infinite() {
            Value::Token("inf")
        } else {
            Value::Number(round_sig(x))
        }
    }

    fn text(self) -> String {
        match self {
            Value::Number(x) => format_sig(x),
            Value::Token(t) => t.to_string(),
        }
    }
}

#[derive(Serialize)]
struct MeasureRecord {
    measure: &'static str,
    state: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<f64>,
    value: Value,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
}

fn require_pure(state: &ResolvedState, role: &str) -> Result<PureState, CliError> {
    state
        .as_pure()
        .ok_or_else(|| CliError::Precondition(format!("NotPure: {role} must be a pure state")))
}

fn entropic_index(q: f64) -> Result<EntropicIndex, CliError> {
    Ok(EntropicIndex::new(q)?)
}

/// Evaluates one measure. Entropies take only `state`; every other measure
/// compares `state` against `reference`.
pub fn cmd_measure(
    state: &StateSpec,
    reference: Option<&StateSpec>,
    measure: MeasureName,
    q: Option<f64>,
    format: OutputFormat,
) -> Result<String, CliError> {
    let index = match (measure.needs_q(), q) {
        (true, None) => return Err(CliError::Precondition(format!("measure {measure} requires --q"))),
        (true, Some(q)) => Some(entropic_index(q)?),
        (false, _) => None,
    };
    let reference = match (measure.needs_reference(), reference) {
        (true, None) => {
            return Err(CliError::Precondition(format!("measure {measure} requires --reference")))
        }
        (true, Some(r)) => Some(r),
        (false, _) => None,
    };

    let rho = state.resolve()?;
    let sigma = reference.map(StateSpec::resolve).transpose()?;
    if let Some(sigma) = &sigma {
        if sigma.dim() != rho.dim() {
            return Err(crate::Error::DimensionMismatch(rho.dim(), sigma.dim()).into());
        }
    }
    let sigma_density = || sigma.as_ref().expect("reference checked").to_density();
    let q_index = || index.expect("q checked");

    let value = match measure {
        MeasureName::Fidelity => measures::fidelity(&sigma_density(), &rho.to_density())?,
        MeasureName::BuresSq => measures::bures_metric_sq(&sigma_density(), &rho.to_density())?,
        MeasureName::KlDivergence => measures::kl_divergence(&rho.to_density(), &sigma_density())?.to_f64(),
        MeasureName::QDivergence => measures::q_divergence(&rho.to_density(), &sigma_density(), q_index())?,
        MeasureName::QDivergenceEigensum => {
            measures::q_divergence_eigensum(&rho.to_density(), &sigma_density(), q_index())?
        }
        MeasureName::QDivergenceJackson => {
            measures::q_divergence_jackson(&rho.to_density(), &sigma_density(), q_index())?
        }
        MeasureName::QDivergencePureRef => {
            let psi = require_pure(sigma.as_ref().expect("reference checked"), "reference")?;
            measures::q_divergence_pure_ref(&rho.to_density(), &psi, q_index())?
        }
        MeasureName::FubiniStudySq => {
            let phi = require_pure(&rho, "state")?;
            let psi = require_pure(sigma.as_ref().expect("reference checked"), "reference")?;
            measures::fubini_study_sq(&phi, &psi)?
        }
        MeasureName::VonNeumannEntropy => measures::von_neumann_entropy(&rho.to_density()),
        MeasureName::TsallisEntropy => measures::tsallis_entropy(&rho.to_density(), q_index()),
    };

    let record = MeasureRecord {
        measure: measure.as_str(),
        state: state.to_string(),
        reference: reference.map(ToString::to_string),
        q: index.map(EntropicIndex::value),
        value: Value::new(value),
    };
    Ok(match format {
        OutputFormat::Json => to_json(&record),
        OutputFormat::Csv => to_csv(
            &["measure", "state", "reference", "q", "value"],
            [vec![
                record.measure.to_string(),
                record.state,
                record.reference.unwrap_or_default(),
                record.q.map(|q| format!("{q:?}")).unwrap_or_default(),
                record.value.text(),
            ]],
        ),
    })
}

#[derive(Serialize)]
struct SweepRow {
    #[serde(rename = "F")]
    f: f64,
    q: f64,
    #[serde(rename = "K_q")]
    k_q: f64,
    #[serde(rename = "K_q_closed")]
    k_q_closed: f64,
    fidelity: f64,
    bures_sq: f64,
}

/// Tabulates the q-divergence of the Werner family against the singlet over
/// `grid`, F-major. A `reference`, when given, must be the singlet up to phase.
pub fn cmd_sweep(
    reference: Option<&StateSpec>,
    grid: &SweepGrid,
    format: OutputFormat,
) -> Result<String, CliError> {
    let singlet = bell_state(BellState::PsiMinus);
    if let Some(spec) = reference {
        let psi = require_pure(&spec.resolve()?, "reference")?;
        if psi.dim() != 4 || measures::fubini_study_sq(&psi, &singlet)? > SINGLET_MATCH_TOL {
            return Err(CliError::Precondition(format!(
                "sweep tabulates the Werner family against |Psi->; reference '{spec}' differs"
            )));
        }
    }
    let sigma = projector(&singlet);

    let mut rows = Vec::with_capacity(grid.f_values().len() * grid.q_values().len());
    for &f in grid.f_values() {
        let param = WernerParameter::new(f)?;
        let rho = werner_state(param);
        let fidelity = measures::fidelity(&sigma, &rho)?;
        let bures_sq = measures::bures_metric_sq(&sigma, &rho)?;
        for &q in grid.q_values() {
            let index = entropic_index(q)?;
            rows.push(SweepRow {
                f,
                q,
                k_q: measures::q_divergence(&rho, &sigma, index)?,
                k_q_closed: measures::werner_q_divergence_closed(param, index),
                fidelity,
                bures_sq,
            });
        }
    }

    Ok(match format {
        OutputFormat::Csv => to_csv(
            &["F", "q", "K_q", "K_q_closed", "fidelity", "bures_sq"],
            rows.iter().map(|r| {
                vec![
                    format!("{:?}", r.f),
                    format!("{:?}", r.q),
                    format_sig(r.k_q),
                    format_sig(r.k_q_closed),
                    format_sig(r.fidelity),
                    format_sig(r.bures_sq),
                ]
            }),
        ),
        OutputFormat::Json => {
            let rounded: Vec<SweepRow> = rows
                .into_iter()
                .map(|r| SweepRow {
                    k_q: round_sig(r.k_q),
                    k_q_closed: round_sig(r.k_q_closed),
                    fidelity: round_sig(r.fidelity),
                    bures_sq: round_sig(r.bures_sq),
                    ..r
                })
                .collect();
            to_json(&rounded)
        }
    })
}

#[derive(Serialize)]
struct KqEntry {
    q: f64,
    value: f64,
}

#[derive(Serialize)]
struct PurificationReport {
    fidelity: f64,
    bures_sq: f64,
    k_q: Vec<KqEntry>,
}

/// Degree of purification of `state` against a pure `reference`:
/// fidelity, squared Bures distance and the pure-reference q-divergence per q.
pub fn cmd_purification_report(
    state: &StateSpec,
    reference: &StateSpec,
    q_values: &[f64],
    format: OutputFormat,
) -> Result<String, CliError> {
    if q_values.is_empty() {
        return Err(CliError::Precondition("report requires at least one --q".into()));
    }
    let indices = q_values.iter().map(|&q| entropic_index(q)).collect::<Result<Vec<_>, _>>()?;
    let rho = state.resolve()?.to_density();
    let psi = require_pure(&reference.resolve()?, "reference")?;
    if psi.dim() != rho.dim() {
        return Err(crate::Error::DimensionMismatch(rho.dim(), psi.dim()).into());
    }
    let sigma = projector(&psi);

    let report = PurificationReport {
        fidelity: round_sig(measures::fidelity(&sigma, &rho)?),
        bures_sq: round_sig(measures::bures_metric_sq(&sigma, &rho)?),
        k_q: indices
            .iter()
            .map(|&q| {
                Ok(KqEntry {
                    q: q.value(),
                    value: round_sig(measures::q_divergence_pure_ref(&rho, &psi, q)?),
                })
            })
            .collect::<Result<_, CliError>>()?,
    };

    Ok(match format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Csv => {
            let mut rows = vec![
                vec!["fidelity".into(), String::new(), format_sig(report.fidelity)],
                vec!["bures_sq".into(), String::new(), format_sig(report.bures_sq)],
            ];
            rows.extend(
                report
                    .k_q
                    .iter()
                    .map(|e| vec!["k_q".into(), format!("{:?}", e.q), format_sig(e.value)]),
            );
            to_csv(&["quantity", "q", "value"], rows)
        }
    })
}

#[derive(Serialize)]
struct ValidationSummary {
    state: String,
    kind: &'static str,
    dim: usize,
    trace: f64,
    purity: f64,
    eigenvalues: Vec<f64>,
}

/// Resolves and validates a state, summarizing its spectrum.
pub fn cmd_validate(state: &StateSpec, format: OutputFormat) -> Result<String, CliError> {
    let resolved = state.resolve()?;
    let kind = match resolved {
        ResolvedState::Density(_) => "density",
        ResolvedState::Pure(_) => "pure",
    };
    let rho = resolved.to_density();
    let summary = ValidationSummary {
        state: state.to_string(),
        kind,
        dim: rho.dim(),
        trace: round_sig(crate::spectral::trace(rho.matrix()).re),
        purity: round_sig(rho.purity()),
        eigenvalues: rho.eigenvalues().iter().map(|&x| round_sig(x)).collect(),
    };
    Ok(match format {
        OutputFormat::Json => to_json(&summary),
        OutputFormat::Csv => {
            let eig: Vec<String> = summary.eigenvalues.iter().map(|&x| format_sig(x)).collect();
            to_csv(
                &["state", "kind", "dim", "trace", "purity", "eigenvalues"],
                [vec![
                    summary.state,
                    kind.into(),
                    summary.dim.to_string(),
                    format_sig(summary.trace),
                    format_sig(summary.purity),
                    eig.join(" "),
                ]],
            )
        }
    })
}
