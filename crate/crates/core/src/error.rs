use thiserror::Error;

use crate::picard::DivisorClass;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index out of range in class name {0}")]
    IndexOutOfRange(String),
    #[error("unknown class name `{0}`")]
    UnknownClassName(String),
    #[error("{0} is not a root (needs r.r = -2 and r.K = 0)")]
    NotARoot(Box<DivisorClass>),
    #[error("half-space normal must be nonzero")]
    ZeroNormal,
    #[error("constraint list is empty")]
    NoConstraints,
    #[error("cone is not pointed: constraint matrix has rank {rank} in dimension {dim}")]
    NotPointed { rank: usize, dim: usize },
    #[error("constraint has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not a pencil class (L_i, L_ij or B_i)")]
    NotAPencil(Box<DivisorClass>),
    #[error("{0} is not nef")]
    NotNef(Box<DivisorClass>),
    #[error("branch list is empty")]
    NoBranches,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("table id must be 1, 2 or 3, got {0}")]
    InvalidTable(u8),
    #[error("sequence point coincides with the target at position {0}")]
    PointEqualsTarget(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
