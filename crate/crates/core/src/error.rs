//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("coxeter matrix is not symmetric at ({i},{j})")]
    AsymmetricMatrix { i: usize, j: usize },

    #[error("coxeter matrix diagonal entry at ({i},{i}) must be 1")]
    BadDiagonal { i: usize },

    #[error("coxeter matrix off-diagonal entry at ({i},{j}) must be 0 (infinity) or >= 2")]
    BadEntry { i: usize, j: usize },

    #[error("inconsistent weights: {0}")]
    InconsistentWeights(String),

    #[error("{what} exceeded cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("operation requires uniform weights")]
    NonUniformWeights,

    #[error("list or set contains the identity element")]
    IdentityEntry,

    #[error("step applied to a leaf list")]
    LeafInput,

    #[error("no reduction guarantee for this presentation: {0}")]
    GuaranteeUnavailable(String),

    #[error("minimal-set closure did not saturate within the iteration cap")]
    UnsaturatedPinf,

    #[error("inequality family has {size} elements, above the limit of {max}")]
    FamilyTooLarge { size: usize, max: usize },

    #[error("zero polynomial has no meaningful root set")]
    ZeroPolynomial,

    #[error("polynomial has no positive real root")]
    NoPositiveRoot,

    #[error("argument must not be the identity")]
    IdentityArgument,

    #[error("clique criterion and reversing disagree on {0}")]
    CliqueDisagreement(String),

    #[error("computation was inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
