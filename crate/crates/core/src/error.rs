use alloc::string::String;
use num_bigint::BigInt;

pub type Result<T> = core::result::Result<T, Error>;

/// Reasons a coefficient list is not accepted as a Weil polynomial.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeilDefect {
    #[error("polynomial is empty or constant")]
    TooShort,
    #[error("degree {0} is odd")]
    OddDegree(usize),
    #[error("leading coefficient is not 1")]
    NotMonic,
    #[error("q = {0} is not a prime power")]
    NotPrimePower(BigInt),
    #[error("functional equation fails at coefficient index {index}")]
    FunctionalEquation { index: usize },
    #[error("some root does not lie on the circle |z| = sqrt(q)")]
    OffCircle,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero has no valuation or square class")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("{p} divides {a}; the Legendre symbol is undefined")]
    NotCoprime { a: BigInt, p: BigInt },
    #[error("the prime 2 is not allowed here")]
    EvenPrime,
    #[error("quadratic form is degenerate")]
    Degenerate,
    #[error("invalid Weil polynomial: {0}")]
    Weil(#[from] WeilDefect),
    #[error("expected a polynomial of degree {expected}, got {found}")]
    Degree { expected: usize, found: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("the extension is split; its norm group is all of Q_p*")]
    SplitExtension,
    #[error("a positive Hodge gap needs a nonsplit quadratic extension")]
    MissingExtension,
    #[error("invalid motive descriptor: {0}")]
    Descriptor(String),
    #[error("certification failed after {bits} bits of precision")]
    PrecisionExhausted { bits: u32 },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
