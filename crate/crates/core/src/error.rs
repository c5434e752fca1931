use thiserror::Error;

/// Failures of exact arithmetic and of the algebraic constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by zero")]
    ZeroDivision,
    #[error("inverse not supported for {0}")]
    UnsupportedInverse(String),
    #[error("cannot take an exact square root of {0}")]
    BadRadicand(String),
    #[error("unknown vector field `{0}`")]
    UnknownField(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("expansion has a nonzero remainder at m_bound = {bound}")]
    IncompleteExpansion { bound: u32 },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("not a weight vector: {0}")]
    NotAWeightVector(String),
    #[error("cocycle value {0} has a nonzero imaginary part")]
    NonRealCocycle(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A syntax error in the text forms of scalars, polynomials or expressions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}
