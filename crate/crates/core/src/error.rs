use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Raising a non-monomial to a negative power, and similar requests that
    /// have no exact representation.
    #[error("unsupported operation: {0}")]
    UnsupportedOperation(String),

    /// A substitution made a denominator identically zero.
    #[error("pole: {0}")]
    Pole(String),

    /// `exact_divide` was asked for a quotient that does not exist.
    /// This is routinely used as a test outcome, not a crash.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    /// The function has no multivariate Laurent expansion (denominator with
    /// zero constant term after clearing monomial content).
    #[error("not admissible: {0}")]
    NotAdmissible(String),

    /// A pole of higher order than the extraction supports.
    #[error("pole order too high: {0}")]
    PoleOrder(String),

    /// Text that does not match the expression grammar.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A table lookup outside the tabulated region.
    #[error("point outside table domain: {0}")]
    Domain(String),

    /// An unknown check id.
    #[error("unknown check id: {0}")]
    Registry(String),

    /// Parameters that do not fit the requested operation.
    #[error("usage: {0}")]
    Usage(String),

    /// A broken internal invariant.
    #[error("internal error: {0}")]
    Internal(String),
}
