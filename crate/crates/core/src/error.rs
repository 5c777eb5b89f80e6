use thiserror::Error;

/// Crate-wide error type. Most operations only produce a small subset of
/// these variants; the variant names follow the failure they describe.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    NonDivisible,
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("level {0} does not divide {1}")]
    NotDivisible(u32, u32),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("zero element")]
    ZeroElement,
    #[error("operation undefined for direction ({0},{1})")]
    ForbiddenDirection(i64, i64),
    #[error("point lies on the diagonal")]
    DiagonalPoint,
    #[error("direction must have rho > 0")]
    NonPositiveRho,
    #[error("({0},{1}) is not an admissible direction")]
    InvalidDirection(i64, i64),
    #[error("identity violation: {0}")]
    IdentityViolation(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("polynomial vanishes at the origin")]
    ZeroAtOrigin,
    #[error("automorphism does not match the requested direction")]
    DirectionMismatch,
    #[error("unknown output format: {0}")]
    UnknownFormat(String),
}
