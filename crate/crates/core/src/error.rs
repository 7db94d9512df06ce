use thiserror::Error;

/// Errors produced by this crate.
#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    /// An argument violates a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A truth-table string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A spectrum swap update was requested for positions that do not form
    /// a valid swap (equal indices, equal bit values, or out of range).
    #[error("invalid swap: {0}")]
    InvalidSwap(String),

    /// A statistic is undefined for the given input (zero variance,
    /// degenerate margins, and similar).
    #[error("undefined statistic: {0}")]
    UndefinedStatistic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
