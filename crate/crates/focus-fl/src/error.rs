use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("client index {index} is out of range 1..={n}")]
    InvalidParticipant { index: usize, n: usize },

    #[error("operation requires a non-empty participant set")]
    EmptyParticipation,

    #[error("matrix kind mismatch: expected {expected}, got {got}")]
    KindMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate problem: {0}")]
    DegenerateProblem(String),

    #[error("system is not strongly convex (singular normal equations)")]
    NotStronglyConvex,

    #[error("empty batch")]
    EmptyBatch,

    #[error("sample index {index} is out of range 0..{k}")]
    InvalidSampleIndex { index: usize, k: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("empty trajectory")]
    EmptyTrajectory,

    #[error("mismatched problem specs across compared configurations")]
    MismatchedProblems,

    #[error("non-positive constant: {0}")]
    NonPositiveConstant(&'static str),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
