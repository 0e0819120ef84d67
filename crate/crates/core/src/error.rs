use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("negative entry {value} at index {index}")]
    NegativeEntry { index: usize, value: f64 },

    #[error("vector is not sorted in descending order (index {index})")]
    Unsorted { index: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite value encountered")]
    NonFinite,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("operand is zero")]
    ZeroOperand,

    #[error("norm is not submultiplicative (f(e1) = {0})")]
    NotSubmultiplicative(f64),

    #[error("map is not of canonical isometry form (residual {residual:.3e})")]
    NotCanonical { residual: f64 },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
