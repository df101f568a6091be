use thiserror::Error;

/// Errors produced by the arithmetic, certification and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is undefined for zero")]
    ZeroArgument(&'static str),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("repeated point {0}")]
    RepeatedPoint(String),

    #[error("{0} is not a Gaussian prime")]
    NotPrime(String),

    #[error("norm {0} exceeds the deterministic primality range")]
    NormTooLarge(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle needs {residues} residues, budget is {budget}")]
    OracleBudget { residues: String, budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
