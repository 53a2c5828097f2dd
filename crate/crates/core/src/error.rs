use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("input is not a symmetric polynomial: coefficient of {0:?} differs from a transposed exponent")]
    NonSymmetricInput(Vec<u32>),
    #[error("negative multiplicity {mult} for {label}")]
    NegativeMultiplicity { label: String, mult: i64 },
    #[error("non-integral multiplicity {value} for {label}")]
    NonIntegralMultiplicity { label: String, value: String },
    #[error("search budget of {0} states exceeded")]
    SearchBudgetExceeded(usize),
    #[error("index {0} too small (need n >= 3)")]
    IndexTooSmall(usize),
    #[error("degree {degree} exceeds configured bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("zero vector has no initial term")]
    ZeroVector,
    #[error("variable index ({0},{1}) out of range for rank {2}")]
    VariableOutOfRange(u32, u32, usize),
    #[error("generator is not homogeneous")]
    NotHomogeneous,
    #[error("operation not supported for flavor {0}")]
    UnsupportedFlavor(String),
    #[error("non-symmetric Tor character at p={p}, q={q}")]
    NonSymmetricCharacter { p: usize, q: usize },
    #[error("d∘d is nonzero at p={p}, q={q}")]
    BoundaryNotNilpotent { p: usize, q: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
