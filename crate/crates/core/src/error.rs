//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the filter-design toolkit.
#[derive(Debug, Error)]
pub enum SfrError {
    #[error("sample rate mismatch: {0} Hz vs {1} Hz")]
    SampleRateMismatch(f64, f64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("objective contains non-smooth terms in cvx mode; use the proximal solver instead")]
    NonSmoothObjective,

    #[error("zero-power spatial map row: {0}")]
    ZeroPowerRow(String),

    #[error("spectrum bin grid does not match the steering grid")]
    GridBinMismatch,

    #[error("solver aborted: {0}")]
    SolverAbort(String),

    #[error("i/o failure at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("wav: {0}")]
    Wav(String),

    #[error("manifest: {0}")]
    Manifest(String),
}

impl SfrError {
    /// Attach a path to a raw I/O error.
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        SfrError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, SfrError>;
