use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("incomparable sizes: {0} and {1} boxes")]
    IncomparableSizes(usize, usize),
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("{0}")]
    Family(String),
    #[error("membership undecided for general shapes: {0}")]
    GeneralShape(String),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
