use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("negative dimension {dim} in degree {degree}")]
    NegativeDimension { degree: i64, dim: String },

    #[error("cannot substitute non-invertible value {value} for variable `{var}` with negative exponent")]
    NotInvertible { var: String, value: String },

    #[error("missing specialization value for p_{0}")]
    MissingRule(usize),

    #[error("series precondition violated: {0}")]
    SeriesPrecondition(String),

    #[error("plethysm of a truncated outer series with an inner function having nonzero constant term")]
    PlethysmConstantTerm,

    #[error("inconsistent subgroup profile: {0}")]
    InconsistentProfile(String),

    #[error("class function is undefined on class {0}")]
    UndefinedClass(String),

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("missing power map for class `{class}` and exponent {r}")]
    MissingPowerMap { class: String, r: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("duplicate block for degree {0}")]
    DuplicateBlock(i64),

    #[error("size bound exceeded: {0} basis tensors (limit 1000000)")]
    SizeBound(u128),

    #[error("twist is not an irreducible character: {0}")]
    NotIrreducible(String),

    #[error("identity mismatch in {identity}: first difference at {location}")]
    Inconsistent { identity: String, location: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
