use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested computation exceeds a size guard. Guards can be moved
    /// with the `CLIFIS_MAX_N` environment variable.
    #[error("{what}: size {size} exceeds limit {limit}")]
    InfeasibleSize {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{solver} did not converge after {iterations} iterations (best value {best})")]
    NonConvergence {
        solver: &'static str,
        iterations: usize,
        best: f64,
    },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{}: {source}", path.display())]
    File {
        path: std::path::PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn file(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::File {
            path: path.to_path_buf(),
            source,
        }
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InfeasibleSize { .. } => 2,
            Error::Internal(_) | Error::NonConvergence { .. } => 3,
            _ => 1,
        }
    }
}
