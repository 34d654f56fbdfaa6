use thiserror::Error;

/// Errors produced by the linear algebra, state and measure layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M^dagger| = {0:e})")]
    NotHermitian(f64),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("function is undefined at eigenvalue {0}")]
    DomainError(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("trace is not one (got {0})")]
    TraceNotOne(f64),

    #[error("state vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("value {value} outside allowed range {range}")]
    OutOfRange { value: f64, range: &'static str },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("Jackson derivative is undefined at x = 0")]
    ZeroPoint,

    #[error("invalid matrix shape: {0}")]
    Shape(String),

    #[error("non-finite entry in matrix or vector")]
    NonFinite,
}

impl Error {
    /// Variant name, used in CLI diagnostics.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Error::NotHermitian(_) => "NotHermitian",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::DomainError(_) => "DomainError",
            Error::NotPositive(_) => "NotPositive",
            Error::TraceNotOne(_) => "TraceNotOne",
            Error::NotNormalized(_) => "NotNormalized",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::ZeroPoint => "ZeroPoint",
            Error::Shape(_) => "Shape",
            Error::NonFinite => "NonFinite",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
