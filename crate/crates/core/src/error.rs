use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// `witness` is a basis vector of the would-be sublattice lying outside the ambient one.
    #[error("not a sublattice (witness {witness:?})")]
    NotSublattice { witness: Vec<BigInt> },

    #[error("invalid generator index x{index} for rank {rank}")]
    InvalidGenerator { index: usize, rank: usize },

    #[error("rank {0} out of range (1..=6)")]
    RankOutOfRange(usize),

    #[error("truncation degree {0} unsupported")]
    UnsupportedDegree(usize),

    #[error("ring context mismatch")]
    ContextMismatch,

    #[error("element has nonzero constant term")]
    NotInAugmentation,

    #[error("divisor chain violated: {0}")]
    DivisorChain(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("word is not in gamma2")]
    NotInGamma2,

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },

    #[error("level {0} unsupported (expected 3 or 4)")]
    UnsupportedLevel(usize),

    #[error("denominator not contained (witness {witness:?})")]
    DenominatorNotContained { witness: Vec<BigInt> },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
