use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the degree bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("degree bounds differ: {left} vs {right}")]
    DegreeBoundMismatch { left: usize, right: usize },

    #[error("inner argument of a plethysm must have zero constant term")]
    NonzeroConstantTerm,

    #[error("polynomial is not symmetric: residual at exponent {0:?}")]
    NotSymmetric(Vec<u32>),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("not a rig homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("invalid category: {0}")]
    InvalidCategory(String),

    #[error("unknown point {0:?}")]
    UnknownPoint(String),

    #[error("symmetric function has empty support")]
    EmptySupport,

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn overflow(p: &Partition, bound: usize) -> Self {
        Error::DegreeOverflow {
            degree: p.size(),
            bound,
        }
    }
}
