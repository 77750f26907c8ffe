use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element lies in the singular set and has no inverse")]
    NotInvertible,
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("index set must be nonempty, strictly increasing and duplicate-free")]
    InvalidIndexSet,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("order {order} exceeds the limit {limit} for this routine")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("matrix dimension {dim} exceeds the guard {limit}")]
    GuardExceeded { dim: usize, limit: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no acceptable sample after {0} draws")]
    RejectionLimitExceeded(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
