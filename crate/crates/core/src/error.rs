use thiserror::Error;

use crate::lie::{AlgebraSpec, BasisElement};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("{element:?} is not a basis element of {algebra}: {reason}")]
    InvalidElement {
        algebra: AlgebraSpec,
        element: BasisElement,
        reason: String,
    },

    #[error("vector field is not in the special algebra: {0}")]
    NotInSn(String),

    #[error("polynomial is constant")]
    ConstantPolynomial,

    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(AlgebraSpec, AlgebraSpec),

    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("invalid degree gap {0} for the requested sign")]
    InvalidDegree(i64),

    #[error("degree gap {gap} exceeds the safety limit {limit}")]
    DegreeGapTooLarge { gap: i64, limit: i64 },

    #[error("D-leader is zero")]
    ZeroLeader,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("lemma {lemma} does not apply to {algebra}")]
    FamilyMismatch { lemma: String, algebra: AlgebraSpec },

    #[error("generator sequence must be nonempty and nonconstant")]
    BadGenerators,

    #[error("generator sequence is not reduced")]
    NotReducedSequence,

    #[error("reduction did not terminate within {limit} steps: {trace}")]
    NonTermination { limit: usize, trace: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("schema violation: {0}")]
    Schema(String),
}
