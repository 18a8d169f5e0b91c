use num_bigint::BigUint;
use thiserror::Error;

use crate::rootdata::GroupSpec;

/// Errors surfaced by the counting library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Explicit partition enumeration was asked for an `n` above the cap.
    #[error("partition enumeration for n = {n} exceeds the configured bound {bound}")]
    EnumerationBound { n: u32, bound: u32 },

    /// A series coefficient beyond the truncation order was requested.
    #[error("coefficient index {index} exceeds truncation order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },

    /// The (group, prime) combination has no classification in the source
    /// literature; nothing is guessed.
    #[error("{spec} at ell = {ell}: not classified in source ({reason})")]
    Unsupported {
        spec: GroupSpec,
        ell: u64,
        reason: String,
    },

    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// An automizer descriptor tree does not have the required shape.
    #[error("malformed automizer descriptor: {0}")]
    MalformedDescriptor(String),

    /// The enumeration and generating-function totals disagree. This never
    /// fires on a correct build; it exists so a transcription bug is loud.
    #[error(
        "computation methods disagree for {spec} at ell = {ell}: \
         enumeration gives {enum_total}, generating function gives {gf_total}"
    )]
    MethodMismatch {
        spec: GroupSpec,
        ell: u64,
        enum_total: BigUint,
        gf_total: BigUint,
    },
}
