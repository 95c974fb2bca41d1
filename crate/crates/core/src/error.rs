use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("index {index} out of range 1..={len}")]
    OutOfRange { index: usize, len: usize },
    #[error("{0} is not a partition (parts must be weakly decreasing)")]
    NotAPartition(String),
    #[error("expected an element in the {expected} basis, found {found}")]
    BasisMismatch { expected: &'static str, found: &'static str },
    #[error("weights must be nonnegative and sum to 1, got sum {0}")]
    BadWeights(String),
    #[error("{factors} factors but {weights} weights")]
    LengthMismatch { factors: usize, weights: usize },
    #[error("malformed paintbox: {0}")]
    MalformedPaintbox(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size {size} exceeds the supported bound {bound}")]
    TooLarge { size: usize, bound: usize },
}
