use thiserror::Error;

use crate::composite::SpecDiagnostic;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: String, right: String },

    #[error("not a group: {0}")]
    InvalidGroup(String),

    #[error("unknown group kind `{0}`")]
    UnknownGroup(String),

    #[error("index {index} out of range for size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("cannot parse {what} `{token}`{}", position.map(|p| format!(" at position {p}")).unwrap_or_default())]
    Parse {
        what: &'static str,
        token: String,
        position: Option<usize>,
    },

    #[error("invalid composite spec: {0}")]
    Spec(SpecDiagnostic),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("code length {0} exceeds the 128-coordinate limit")]
    TooLong(usize),

    #[error("dimension {dim} exceeds the enumeration budget of {max}")]
    OverBudget { dim: usize, max: usize },

    #[error("operation requires characteristic 2")]
    Characteristic,

    #[error("neighbour vector already lies in the code")]
    VectorInCode,

    #[error("neighbour vector is not self-orthogonal")]
    VectorNotIsotropic,

    #[error("neighbour chain failed at step {step}: {source}")]
    ChainStep { step: usize, source: Box<Error> },

    #[error("extension precondition failed: {0}")]
    Extension(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
