use thiserror::Error;

use crate::types::{LieType, Weight};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no finite-type algebra {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("cannot parse algebra type {0:?}; expected a family letter followed by a rank, e.g. E7")]
    ParseType(String),

    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("affine root index {index} out of range 0..={rank}")]
    AffineIndexOutOfRange { index: usize, rank: usize },

    #[error("{index} is not a miniscule coweight index for {ty}")]
    NotMiniscule { ty: LieType, index: usize },

    #[error("weight {weight} is not admissible at level {level} for {ty}")]
    NotAdmissible {
        ty: LieType,
        level: i64,
        weight: Weight,
    },

    #[error("level must be at least {min}, got {level}")]
    InvalidLevel { level: i64, min: i64 },

    #[error("image {image} of affine root {source_index} under the word is not an affine simple root of {ty}")]
    NotAffinePermutation {
        ty: LieType,
        source_index: usize,
        image: Weight,
    },

    #[error("comark {index} of {ty} is not an integer")]
    NonIntegralComark { ty: LieType, index: usize },

    #[error("action of coweight {coweight} on level-{level} weights of {ty} is not a bijection: {detail}")]
    NotBijective {
        ty: LieType,
        level: i64,
        coweight: usize,
        detail: String,
    },

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}
