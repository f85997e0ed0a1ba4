use thiserror::Error;

use crate::rootdata::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),

    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {weight} has length {got}, expected rank {expected}")]
    RankMismatch {
        weight: Weight,
        got: usize,
        expected: usize,
    },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {0} is not regular")]
    NotRegular(Weight),

    #[error("Weyl group order exceeds the enumeration bound {bound}")]
    WeylBoundExceeded { bound: usize },

    #[error("multiset is not invariant under reflection {reflection}: witness {witness}")]
    NotInvariant { reflection: usize, witness: Weight },

    #[error("decomposition did not terminate within {0} steps")]
    StepBound(usize),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("weight {0} does not lie in the lattice coset required here")]
    WrongCoset(Weight),

    #[error("operand mismatch: {0}")]
    OperandMismatch(String),

    #[error("value out of supported range: {0}")]
    OutOfRange(String),

    #[error("invalid matrix input: {0}")]
    InvalidMatrix(String),

    #[error("parse error: {0}")]
    Parse(String),
}
