use thiserror::Error;

use crate::character::Weight;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exact division by a `(1 - t^w)` factor left a remainder.
    #[error("numerator is not divisible by (1 - {weight})")]
    NotDivisible { weight: Weight },

    /// An Euler-type class was requested for a class with a trivial summand.
    #[error("class has a T-fixed part of rank {rank}")]
    FixedPartPresent { rank: i64 },

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
