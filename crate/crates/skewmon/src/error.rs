use thiserror::Error;

/// errors raised by constructions; axiom failures are reported, not raised
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("linear system has no solution: {0}")]
    NoSolution(String),
    #[error("matrix is not invertible")]
    Singular,
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("invalid algebraic data: {0}")]
    Invalid(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("not well defined on the quotient: {0}")]
    NotWellDefined(String),
    #[error("input error at {path}: {msg}")]
    Input { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
