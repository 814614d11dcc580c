use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("pole at t = {0}")]
    PoleAtPoint(String),
    #[error("unknown atom {0}: no value and no fiber chain to extend from")]
    UnknownAtom(String),
    #[error("map {0} cannot be factorized into elementary steps")]
    NotFactorizable(String),
    #[error("no measure exists at bound {bound}: {reason}")]
    Inconsistent { bound: usize, reason: String },
    #[error("measure family needs {0} free parameters; only one is supported")]
    TooManyParameters(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map is not surjective: {0}")]
    NotSurjective(String),
    #[error("backend mismatch: {0} vs {1}")]
    BackendMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
