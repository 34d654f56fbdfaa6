use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::format::parse_state_file;
use super::CliError;
use crate::states::{
    bell_state, maximally_mixed, projector, random_density, random_pure, werner_state, BellState,
    DensityMatrix, PureState, WernerParameter,
};

/// A state given on the command line: a named generator or a path to a state file.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    File(PathBuf),
    Named(NamedState),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedState {
    Bell(BellState),
    Werner(WernerParameter),
    MaximallyMixed { dim: usize },
    Random { dim: usize, seed: u64 },
    RandomPure { dim: usize, seed: u64 },
}

impl fmt::Display for NamedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedState::Bell(kind) => write!(f, "bell:{kind}"),
            NamedState::Werner(p) => write!(f, "werner:F={}", p.value()),
            NamedState::MaximallyMixed { dim } => write!(f, "maximally-mixed:d={dim}"),
            NamedState::Random { dim, seed } => write!(f, "random:d={dim},seed={seed}"),
            NamedState::RandomPure { dim, seed } => write!(f, "random-pure:d={dim},seed={seed}"),
        }
    }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpec::File(path) => write!(f, "{}", path.display()),
            StateSpec::Named(named) => named.fmt(f),
        }
    }
}

const PREFIXES: [&str; 5] = ["bell:", "werner:", "maximally-mixed:", "random:", "random-pure:"];

impl FromStr for StateSpec {
    type Err = CliError;

    /// Strings starting with a generator prefix must parse as that generator;
    /// anything else is taken as a file path.
    fn from_str(s: &str) -> Result<Self, CliError> {
        if !PREFIXES.iter().any(|p| s.starts_with(p)) {
            if s.is_empty() {
                return Err(CliError::Parse("empty state spec".into()));
            }
            return Ok(StateSpec::File(PathBuf::from(s)));
        }
        let bad = |msg: String| CliError::Parse(format!("state spec '{s}': {msg}"));
        let (head, params) = s.split_once(':').expect("prefix contains ':'");
        let named = match head {
            "bell" => NamedState::Bell(params.parse().map_err(bad)?),
            "werner" => {
                let f = key_value(params, "F").map_err(bad)?;
                let f: f64 = f.parse().map_err(|_| bad(format!("invalid F '{f}'")))?;
                NamedState::Werner(WernerParameter::new(f).map_err(|e| bad(e.to_string()))?)
            }
            "maximally-mixed" => NamedState::MaximallyMixed {
                dim: parse_dim(key_value(params, "d").map_err(bad)?).map_err(bad)?,
            },
            "random" | "random-pure" => {
                let (d, seed) = params
                    .split_once(',')
                    .ok_or_else(|| bad("expected d=<int>,seed=<int>".into()))?;
                let dim = parse_dim(key_value(d, "d").map_err(bad)?).map_err(bad)?;
                let seed = key_value(seed, "seed").map_err(bad)?;
                let seed: u64 = seed.parse().map_err(|_| bad(format!("invalid seed '{seed}'")))?;
                if head == "random" {
                    NamedState::Random { dim, seed }
                } else {
                    NamedState::RandomPure { dim, seed }
                }
            }
            _ => unreachable!("prefix list and match arms agree"),
        };
        Ok(StateSpec::Named(named))
    }
}

fn key_value<'a>(s: &'a str, key: &str) -> Result<&'a str, String> {
    match s.split_once('=') {
        Some((k, v)) if k == key => Ok(v),
        _ => Err(format!("expected {key}=<value>, got '{s}'")),
    }
}

fn parse_dim(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(d) if d > 0 => Ok(d),
        _ => Err(format!("invalid dimension '{s}'")),
    }
}

/// A state after generation or file loading.
#[derive(Debug, Clone, PartialEq)]
pub enum ResolvedState {
    Density(DensityMatrix),
    Pure(PureState),
}

impl ResolvedState {
    pub fn dim(&self) -> usize {
        match self {
            ResolvedState::Density(rho) => rho.dim(),
            ResolvedState::Pure(psi) => psi.dim(),
        }
    }

    pub fn to_density(&self) -> DensityMatrix {
        match self {
            ResolvedState::Density(rho) => rho.clone(),
            ResolvedState::Pure(psi) => projector(psi),
        }
    }

    /// The state vector, for pure states and rank-one density matrices.
    pub fn as_pure(&self) -> Option<PureState> {
        match self {
            ResolvedState::Pure(psi) => Some(psi.clone()),
            ResolvedState::Density(rho) => rho.as_pure(),
        }
    }
}

impl StateSpec {
    pub fn resolve(&self) -> Result<ResolvedState, CliError> {
        match self {
            StateSpec::File(path) => {
                let bytes = std::fs::read(path)
                    .map_err(|e| CliError::Parse(format!("cannot read '{}': {e}", path.display())))?;
                parse_state_file(&bytes).map_err(|e| match e {
                    CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
                    CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
                    other => other,
                })
            }
            StateSpec::Named(named) => Ok(match *named {
                NamedState::Bell(kind) => ResolvedState::Pure(bell_state(kind)),
                NamedState::Werner(p) => ResolvedState::Density(werner_state(p)),
                NamedState::MaximallyMixed { dim } => ResolvedState::Density(maximally_mixed(dim)?),
                NamedState::Random { dim, seed } => ResolvedState::Density(random_density(dim, seed)?),
                NamedState::RandomPure { dim, seed } => ResolvedState::Pure(random_pure(dim, seed)?),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(s: &str) -> NamedState {
        match s.parse::<StateSpec>().unwrap() {
            StateSpec::Named(n) => n,
            other => panic!("{s} parsed as {other:?}"),
        }
    }

    #[test]
    fn parses_every_generator() {
        assert_eq!(named("bell:psi-"), NamedState::Bell(BellState::PsiMinus));
        assert_eq!(named("bell:phi+"), NamedState::Bell(BellState::PhiPlus));
        assert_eq!(named("werner:F=0.7"), NamedState::Werner(WernerParameter::new(0.7).unwrap()));
        assert_eq!(named("maximally-mixed:d=3"), NamedState::MaximallyMixed { dim: 3 });
        assert_eq!(named("random:d=4,seed=7"), NamedState::Random { dim: 4, seed: 7 });
        assert_eq!(named("random-pure:d=2,seed=1"), NamedState::RandomPure { dim: 2, seed: 1 });
    }

    #[test]
    fn display_round_trips() {
        for s in ["bell:psi+", "werner:F=0.25", "maximally-mixed:d=2", "random:d=3,seed=9", "random-pure:d=8,seed=0"] {
            assert_eq!(named(s).to_string(), s);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        for s in [
            "bell:psi",
            "werner:F=0.1",
            "werner:G=0.5",
            "werner:F=abc",
            "maximally-mixed:d=0",
            "random:d=4",
            "random:d=4,seed=-1",
            "random-pure:seed=1,d=2",
        ] {
            assert!(matches!(s.parse::<StateSpec>(), Err(CliError::Parse(_))), "{s}");
        }
    }

    #[test]
    fn other_strings_are_paths() {
        assert_eq!("state.json".parse::<StateSpec>().unwrap(), StateSpec::File("state.json".into()));
        let missing = StateSpec::File("/nonexistent/state.json".into()).resolve();
        assert!(matches!(missing, Err(CliError::Parse(_))));
    }

    #[test]
    fn resolves_kinds() {
        assert!(matches!(named_resolve("bell:psi-"), ResolvedState::Pure(_)));
        assert!(matches!(named_resolve("werner:F=0.5"), ResolvedState::Density(_)));
        assert!(named_resolve("werner:F=1").as_pure().is_some());
        assert!(named_resolve("werner:F=0.9").as_pure().is_none());
    }

    fn named_resolve(s: &str) -> ResolvedState {
        s.parse::<StateSpec>().unwrap().resolve().unwrap()
    }
}
