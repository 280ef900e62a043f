use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series has genuinely fractional exponents; operation needs integer exponents")]
    NonIntegerGrain,
    #[error("requested coefficient index {requested} exceeds available order {available}")]
    OrderExceeded { requested: usize, available: usize },
    #[error("unsupported weight {0}")]
    BadWeight(i64),
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown form label `{0}`")]
    UnknownLabel(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("evaluation point must satisfy t > 0")]
    NonPositiveT,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
