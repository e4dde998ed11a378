use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("root order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("unsupported root order {0}")]
    UnsupportedOrder(u32),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("grid is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {0} exceeds the supported maximum of {max}", max = crate::MAX_DIM)]
    TooLarge(usize),

    #[error("unknown catalog matrix `{0}`")]
    UnknownMatrix(String),

    #[error("invalid (x, y, z) assignment: values must be 1, w, w^2 in some order")]
    InvalidAssignment,

    #[error("matrix is not a complex Hadamard matrix")]
    NotHadamard,

    #[error("matrix is not real symmetric")]
    Asymmetric,

    #[error("invalid permutation")]
    InvalidPermutation,

    #[error("root finder failed: {0}")]
    Convergence(String),

    #[error("numerical rank is indeterminate: singular value ratio {ratio:e} lies in the guard band")]
    IndeterminateRank { ratio: f64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// True for failures of floating point procedures (CLI exit code 3).
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Convergence(_) | Error::IndeterminateRank { .. })
    }
}
