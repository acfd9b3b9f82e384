use thiserror::Error;

/// Failures of supernatural and descriptor arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("expected a positive integer, got 0")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} listed twice")]
    DuplicatePrime(u64),
    #[error("factoring {value} needs trial divisors above the bound {bound}")]
    TrialBoundExceeded { value: String, bound: u64 },
    #[error("scaling {value} by {ratio}: denominator does not divide")]
    DenominatorDoesNotDivide { value: String, ratio: String },
    #[error("{divisor} does not divide {value}")]
    NotADivisor { divisor: u64, value: String },
    #[error("relative rank {0} exceeds 1")]
    RankAboveOne(String),
    #[error("exponent overflow")]
    ExponentOverflow,
}
