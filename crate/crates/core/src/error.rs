use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("pole of {op} at s = {s}")]
    Pole { op: &'static str, s: f64 },

    #[error("{op} did not converge (error estimate {err:e})")]
    NonConvergence { op: &'static str, err: f64 },

    #[error("{op}: {detail}")]
    Accuracy { op: &'static str, detail: String },

    #[error("ill-conditioned extrapolation: {0}")]
    IllConditioned(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("invalid evaluation context: {0}")]
    InvalidContext(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { op, detail: detail.into() }
    }

    pub fn is_non_convergence(&self) -> bool {
        matches!(self, Error::NonConvergence { .. } | Error::Accuracy { .. } | Error::IllConditioned(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
