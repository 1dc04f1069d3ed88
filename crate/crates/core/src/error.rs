use thiserror::Error;

/// Failures of the arithmetic primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: String, modulus: String },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("no representation 4p = L^2 + 27M^2 for p = {0}")]
    NoRepresentation(u64),
    #[error("valuation of zero is undefined")]
    ZeroValuation,
}
