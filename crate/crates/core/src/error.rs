use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not exactly divisible by the given divisor")]
    NotDivisible,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index out of range: {0}")]
    Index(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("edge set is not a spanning tree: {0}")]
    NotATree(String),
    #[error("points live over different field extensions")]
    FieldMismatch,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
}

pub type Result<T> = std::result::Result<T, Error>;
