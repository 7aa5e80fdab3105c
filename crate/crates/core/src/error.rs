use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    Dimension {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("assumption {assumption} violated: {detail}")]
    Assumption {
        assumption: &'static str,
        detail: String,
    },

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("inadmissible parameters: delta1 = {delta1:.6e} must be positive")]
    Inadmissible { delta1: f64 },

    #[error("no penalty parameter can make delta1 positive: {0}")]
    NoAdmissibleBeta(String),

    #[error("eta0 is infeasible: {hint}")]
    Eta0Infeasible { hint: String },

    #[error("inner y-solver stopped at gradient norm {grad_norm:.3e} (target {target:.3e}) after {iters} iterations")]
    InnerSolver {
        grad_norm: f64,
        target: f64,
        iters: usize,
    },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("multiplier diverged at iteration {k}: |lambda| = {norm:.3e}")]
    Divergence { k: usize, norm: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("generator error: {0}")]
    Generator(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn dim(context: &'static str, expected: usize, actual: usize) -> Self {
        Error::Dimension {
            context,
            expected,
            actual,
        }
    }

    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }

    /// True for errors caused by the inputs rather than by the numerics of a run.
    pub fn is_configuration(&self) -> bool {
        !matches!(self, Error::InnerSolver { .. } | Error::NonFinite(_))
    }
}
