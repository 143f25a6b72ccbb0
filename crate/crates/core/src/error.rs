use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("dimension mismatch: {op} of {lhs:?} and {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("malformed equation: {0}")]
    Equation(String),

    /// A computed result failed its own verification. Always a bug.
    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}

/// Syntax error in a rational, quaternion or biquaternion literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: expected {}", expected.join(" or "))]
pub struct ParseError {
    /// Byte offset into the input where parsing stopped.
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
