use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("torus knot parameters must be positive, got ({0}, {1})")]
    NonPositive(i64, i64),

    #[error("torus knot parameters must be coprime, got ({0}, {1}) with gcd {2}")]
    NonCoprime(i64, i64, i64),

    #[error("polynomial division left a nonzero remainder")]
    InternalDivision,

    #[error("polynomial is not symmetric at exponent {0}")]
    NotSymmetric(i64),

    #[error("closed form is only tabulated for p in {{5, 6}}, got T({0},{1})")]
    Unsupported(i64, i64),

    #[error("T({0},{1}) is not of the form T(p, kp ± 1)")]
    NotPinchFamily(i64, i64),

    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
