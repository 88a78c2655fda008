use num_bigint::BigUint;
use thiserror::Error;

/// Errors returned by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A quotient was requested with a zero divisor.
    #[error("division by zero")]
    DivisionByZero,

    /// An argument was outside an operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The element has no multiplicative inverse for the given modulus.
    /// Carries the offending gcd.
    #[error("not invertible: gcd={gcd}")]
    NonInvertible { gcd: BigUint },

    /// The trial-division oracle was called above its enforced bound.
    #[error("oracle bound exceeded: {value} > {bound}")]
    OracleBoundExceeded { value: BigUint, bound: u64 },

    /// A trace violated a structural precondition of the check being run.
    #[error("malformed trace: {0}")]
    MalformedTrace(String),

    /// The host cannot provide the resources the computation would need.
    #[error("resource exhausted: {0}")]
    ResourceExhausted(String),
}
