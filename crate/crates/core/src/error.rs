//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by group construction, character theory and the
/// decomposition methods.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    UnsupportedOrder { order: u64, cap: u64 },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group is not a VZ-group")]
    NotVz,
    #[error("operation requires an odd prime")]
    EvenPrime,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{k} is not a unit modulo {n}")]
    NotAUnit { k: u64, n: u64 },
    #[error("unsupported group structure: {0}")]
    UnsupportedStructure(String),
    #[error("character list is not closed under the Galois action")]
    NotClosed,
    #[error("no required pair found: {0}")]
    NoPairFound(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element is not central")]
    NotCentral,
    #[error("inconsistent linear character: {0}")]
    InconsistentCharacter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
