use chrono::NaiveDate;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("missing required column \"{0}\"")]
    MissingColumn(String),
    #[error("input is not valid UTF-8 (first bad byte at offset {0})")]
    Encoding(usize),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("author name is empty")]
    EmptyAuthor,
    #[error("invalid date \"{0}\"")]
    BadDate(String),
    #[error("range start {from} is after range end {to}")]
    InvalidRange { from: NaiveDate, to: NaiveDate },
    #[error("unknown granularity \"{0}\" (expected year or month)")]
    UnknownGranularity(String),
    #[error("unknown corpus format \"{0}\" (expected csv or s2)")]
    UnknownFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Errors from the analytics operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalyticsError {
    #[error("n must be at least 1, got {0}")]
    InvalidN(usize),
    #[error("k must be at least 1, got {0}")]
    InvalidK(usize),
}
