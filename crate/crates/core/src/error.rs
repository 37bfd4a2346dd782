use thiserror::Error;

/// Errors raised by the geometry, algebra and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("triangle is degenerate (zero area)")]
    DegenerateTriangle,
    #[error("triangle has a non-integral vertex")]
    NonIntegralVertices,
    #[error("affine map is not unimodular (det = {0})")]
    NotUnimodular(i64),
    #[error("({m}, {n}) does not satisfy (M+N)^2 = K*M*N + 1 for K = {k}")]
    NotASolution { k: String, m: String, n: String },
    #[error("K must be at least {min}, got {k}")]
    KOutOfRange { k: i64, min: i64 },
    #[error("image has a negative coordinate")]
    NegativeResult,
    #[error("division is not exact")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("vanishing order search exceeded bound {0}")]
    OrderBoundExceeded(usize),
    #[error("no edge with the requested outward normal")]
    NoSuchEdge,
    #[error("moment system has only the trivial solution")]
    NoCurve,
    #[error("moment system has a {0}-dimensional solution space")]
    NonUnique(usize),
    #[error("expected {expected} points, got {got}")]
    WrongCardinality { expected: usize, got: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("alpha + beta = {sum} exceeds the negative-curve budget {budget}")]
    BudgetExceeded { sum: String, budget: String },
    #[error("coordinate does not fit in a machine integer")]
    Overflow,
    #[error("chain index {index} exceeds the configured cap {cap}")]
    ChainTooDeep { index: usize, cap: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
