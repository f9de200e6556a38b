use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    GammaPole(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    #[error("quadrature failure: {0}")]
    Quadrature(String),

    #[error("solver failure: {0}")]
    Solver(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("adjoint state is singular at t = T for alpha = {alpha} < 1")]
    TerminalEvaluation { alpha: f64 },

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
