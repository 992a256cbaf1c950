use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Motzkin path at step {index}: {reason}")]
    InvalidPath { index: usize, reason: String },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid head/tail pairs: {0}")]
    InvalidPairs(String),

    #[error("permutation {0} is not an involution")]
    NotInvolution(String),

    #[error("permutation {perm} is not in class {class}")]
    NotInClass { perm: String, class: String },

    #[error("n = {n} exceeds the enumeration guard ({limit}) for class {class}; set the override to proceed")]
    SizeGuard { n: usize, limit: usize, class: String },

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },

    #[error("b-file line {line}: {reason}")]
    BFile { line: usize, reason: String },
}
