use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("square root of negative integer {0}")]
    NegativeRadicand(i64),

    #[error("a curve of degree {delta} cannot span P^{ambient}")]
    DegenerateSpan { delta: i64, ambient: i64 },

    #[error("no Gruson-Peskine bound for surfaces of degree {0} (supported: 4, 5, 6)")]
    UnsupportedSurfaceDegree(i64),

    #[error("invalid scroll class: {0}")]
    InvalidScrollClass(String),

    #[error("invariant violated: {0}")]
    InvariantViolated(String),

    #[error("arithmetic genus {0} is not an integer")]
    NonIntegralGenus(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}
