//! Error type shared by all engine modules.

use thiserror::Error;

/// Errors produced by subgroup enumeration, series assembly, and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration would visit more states than the configured cap allows.
    #[error("enumeration of {needed} states exceeds the cap of {cap}")]
    Capacity { needed: u128, cap: u64 },

    /// A parameter fails a structural precondition (n < 1, N < 2, ...).
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// A custom subgroup is not stable under coordinate permutation.
    #[error("subgroup is not stable under coordinate permutations")]
    NotSnStable,

    /// The separability split requires a constant term of exactly 1.
    #[error("polynomial has constant term {0}, expected 1")]
    ConstantTermNotOne(String),
}

pub type Result<T> = std::result::Result<T, Error>;
