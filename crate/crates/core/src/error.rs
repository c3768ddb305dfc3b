use thiserror::Error;

/// Errors surfaced by the library. Validation negatives (closure
/// counterexamples, functor violations) are reported as data, not errors.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("multiplication table is not a group: {0}")]
    TableNotAGroup(String),
    #[error("order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("search space of size {size} exceeds the configured limit {limit}")]
    SearchBoundExceeded { size: u128, limit: u128 },
    #[error("element set is not a subgroup of the given group")]
    NotASubgroup,
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("span feet do not match: expected {expected}, found {found}")]
    FeetMismatch { expected: String, found: String },
    #[error("{leg} leg of composite leaves its declared class `{class}`")]
    ClassViolation { leg: &'static str, class: String },
    #[error("hom-set is infinite: forward leg class `{0}` is not contained in the faithful maps")]
    InfiniteHomSet(String),
    #[error("skeleton is missing a required group: {0}")]
    SkeletonIncomplete(String),
    #[error("invalid indexing system: {0}")]
    InvalidIndexingSystem(String),
    #[error("invalid transfer system: {0}")]
    InvalidTransferSystem(String),
    #[error("operation requires a connected groupoid, got {0}")]
    NotConnected(String),
    #[error("unknown group preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
