use alloc::string::String;

/// Errors raised by sequence construction, classification and series evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("insufficient length: needed {needed} terms, {available} available")]
    InsufficientLength { needed: usize, available: usize },

    #[error("not a nonnegative sequence: term {index} is negative or non-real")]
    NotNonnegative { index: usize },

    #[error("invalid weight sequence at n = {index}: {reason}")]
    InvalidWeight { index: usize, reason: &'static str },

    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },

    #[error("{what} = {value} is outside (0, pi]")]
    OutOfDomain { what: &'static str, value: f64 },

    #[error("sector half-angle {0} is outside [0, pi/2)")]
    InvalidSector(f64),

    #[error("evaluation grid is empty")]
    EmptyGrid,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
