use thiserror::Error;

/// Errors surfaced by group construction, set operations, and the search engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group order {order} exceeds the configured limit {limit}")]
    OrderLimit { order: u64, limit: u64 },

    #[error("cyclic factor orders must be at least 2, got {0}")]
    BadFactor(u32),

    #[error("a group needs at least one cyclic factor")]
    EmptyFactors,

    #[error("element index {index} out of range for group of order {order}")]
    ElementRange { index: u32, order: u32 },

    #[error("coordinate {value} out of range for factor Z{modulus}")]
    CoordRange { value: i64, modulus: u32 },

    #[error("operands belong to different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },

    #[error("operation undefined on the empty set")]
    EmptySet,

    #[error("the set must contain the neutral element 0")]
    ZeroNotInSet,

    #[error("the set does not generate the group")]
    NotGenerating,

    #[error("group order {order} is below the minimum {min} required for k = {k}")]
    OrderTooSmall { order: u32, min: u32, k: u32 },

    #[error("group order {order} exceeds the exhaustive search bound {max} for k = {k}")]
    SearchLimit { order: u32, max: u32, k: u32 },

    #[error("no admissible set of size at least {k} exists on both sides of the cut")]
    NotSeparable { k: u32 },

    #[error("the given set is not a subgroup")]
    NotASubgroup,

    #[error("the pair is not a weak pair, no decomposition applies")]
    NotAWeakPair,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
