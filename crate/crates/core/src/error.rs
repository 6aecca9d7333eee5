use thiserror::Error;

use crate::io::expr::ExprError;
use crate::io::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u32, u32),
    #[error("negative multiplicity {multiplicity} at exponent {exponent}")]
    NegativeMultiplicity { exponent: String, multiplicity: i64 },
    #[error("invalid weight system: {0}")]
    InvalidWeights(String),
    #[error("degree {degree} does not exceed weight {weight}: no isolated singularity")]
    NotIsolated { degree: u32, weight: u32 },
    #[error("weights {weights:?} with degree {degree} admit no weighted-homogeneous isolated singularity")]
    NotWeightedHomogeneous { weights: Vec<u32>, degree: u32 },
    #[error("Milnor number {0} is not an integer")]
    NonIntegralMilnor(String),
    #[error("index {index} outside [1, {max}]")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("invalid branch data: {0}")]
    InvalidBranches(String),
    #[error("operation requires ordinary singularities; point {0} has weights other than (1,1)")]
    NotOrdinary(usize),
    #[error("incidence data required but absent")]
    MissingIncidence,
    #[error("incidence check needs a full incidence matrix")]
    IncidenceUnavailable,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}
