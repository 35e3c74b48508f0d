use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("rank {0} exceeds the supported maximum of {max}", max = crate::rootdata::MAX_RANK)]
    RankTooLarge(usize),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("enumeration bound exceeded: {what} has {size} elements, bound is {bound}")]
    BoundExceeded { what: String, size: u64, bound: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight {weight} has length {got}, expected rank {expected}")]
    RankMismatch { weight: String, got: usize, expected: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("character basis mismatch: expected {expected}, got {got}")]
    BasisMismatch { expected: String, got: String },
    #[error("affine generator search failed for component {0}")]
    GeneratorSearch(usize),
    #[error("{0} is not a length-zero element")]
    NotLengthZero(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
