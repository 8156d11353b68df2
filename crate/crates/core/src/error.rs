use thiserror::Error;

/// Failures while reading textual or JSON input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational literal `{0}`")]
    Rational(String),
    #[error("invalid space descriptor `{0}` (expected fin:<n>, lex or pl)")]
    Descriptor(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// Errors raised by the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RieszError {
    #[error("element does not belong to {space}: {detail}")]
    SpaceMismatch { space: String, detail: String },
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("t = {0} lies outside [0, 1]")]
    OutsideDomain(String),
    #[error("invalid piecewise-linear function: {0}")]
    InvalidPl(String),
    #[error("dimension {0} too large (at most {1})")]
    TooLarge(usize, usize),
    #[error("quotient by the whole space is the zero space, which has no unit")]
    ZeroQuotient,
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("invalid finite space: {0}")]
    InvalidSpace(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),
    #[error("invalid expression: {0}")]
    InvalidExpr(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = RieszError> = std::result::Result<T, E>;
