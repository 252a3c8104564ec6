use thiserror::Error;

use crate::structures::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid structure: {0}")]
    Invalid(ValidationReport),

    #[error("dangling state {0}: no incident edge")]
    Dangling(String),

    #[error("state {0} has incident edges but all of them have zero weight")]
    ZeroIncidentWeight(String),

    #[error("markov chain is reducible ({0} strongly connected components)")]
    Reducible(usize),

    #[error("markov chain is periodic (period {0})")]
    Periodic(usize),

    #[error("stationary iteration did not reach tolerance {tol} after {iters} iterations")]
    NotConverged { tol: f64, iters: usize },

    #[error("infeasible balance: {0}")]
    Infeasible(String),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("{pointer}: {msg}")]
    Document { pointer: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn shape(op: &'static str, detail: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            op,
            detail: detail.into(),
        }
    }
}

impl Error {
    /// Stable machine-readable tag for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ShapeMismatch { .. } => "shape",
            Error::NonFinite(_) => "non_finite",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Invalid(_) => "invalid",
            Error::Dangling(_) => "dangling",
            Error::ZeroIncidentWeight(_) => "zero_weight",
            Error::Reducible(_) => "reducible",
            Error::Periodic(_) => "periodic",
            Error::NotConverged { .. } => "not_converged",
            Error::Infeasible(_) => "infeasible",
            Error::GuardExceeded(_) => "guard",
            Error::Parse { .. } => "parse",
            Error::Document { .. } => "document",
            Error::Io(_) => "io",
            Error::Csv(_) => "csv",
        }
    }
}
