use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^63")]
    NotPrime(u64),
    #[error("denominator vanishes: {0}")]
    ZeroDenominator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("element is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("degree {degree} is beyond the computed bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("matrix has rank {actual}, expected {expected}")]
    WrongRank { expected: String, actual: usize },
    #[error("not a monomial matrix: {0}")]
    NotMonomial(String),
    #[error("inconsistent presentation: {0}")]
    Presentation(String),
    #[error("bound insufficient at homological degree {step}, internal degree {degree}: {reason}")]
    BoundInsufficient { step: usize, degree: usize, reason: String },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
