use thiserror::Error;

use crate::scalar::FieldTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("incompatible fields: {left} and {right}")]
    IncompatibleField { left: FieldTag, right: FieldTag },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Raised by every projector and decomposition when 2 is not invertible.
    #[error("characteristic 2: decomposition undefined")]
    CharacteristicTwo,

    #[error("matrix is singular")]
    Singular,

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("modulus {0} is not a supported prime")]
    NotPrime(u64),

    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{cases} cases exceed the budget of {budget}")]
    BudgetExceeded { cases: u128, budget: u64 },

    #[error("unknown law `{0}`")]
    UnknownLaw(String),

    #[error("law `{0}` is not searchable for counterexamples")]
    NotSearchable(String),

    #[error("invalid domain: {0}")]
    InvalidDomain(String),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
