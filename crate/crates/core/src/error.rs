use std::path::PathBuf;

use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid root-of-unity order {0}: must be between 1 and {1}")]
    InvalidOrder(usize, usize),
    #[error("cannot embed an element of order {from} into order {to}: {from} does not divide {to}")]
    Embedding { from: usize, to: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("constant term must be nonzero")]
    InvalidPolynomial,
    #[error("denominator has a zero constant term")]
    NonUnitConstantTerm,
    #[error("coefficient index {index} is outside the truncation order {truncation}")]
    TruncationExceeded { index: usize, truncation: usize },
    #[error("no repetition found within {0} steps")]
    PeriodNotFound(usize),
    #[error("no eventual period verified within {0} terms")]
    NotPeriodicWithinBudget(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("I/O error on {path}: {message}")]
    Io { path: PathBuf, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
