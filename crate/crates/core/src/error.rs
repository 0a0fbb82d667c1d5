use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicands {0} and {1} do not define the same quadratic field")]
    MixedRadicand(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("continued fraction has zero denominator")]
    ZeroDenominator,
    #[error("matrix {0} is not reduced")]
    NotReduced(String),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("companion decomposition does not multiply to {0}")]
    DecompositionMismatch(String),
    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("{0}/{1} is not in lowest terms")]
    NotCoprime(String, String),
    #[error("matrix {0} does not have determinant 1")]
    NotUnimodular(String),
    #[error("no residue u exists for triple {0}")]
    NoResidue(String),
    #[error("empty period")]
    EmptyPeriod,
    #[error("subtractive step made no progress on {0}")]
    Stuck(String),
    #[error("invalid trace: {0}")]
    InvalidTrace(String),
    #[error("body cannot be attached: {0}")]
    IncompatibleArity(String),
    #[error("zero vector")]
    ZeroVector,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
