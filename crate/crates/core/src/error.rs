use thiserror::Error;

/// Errors produced by parsing, constraint validation, the constructive maps
/// and the series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in partition literal at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("parts must be strictly decreasing in a literal: {prev} is followed by {next}")]
    NotDecreasing { prev: u64, next: u64 },

    #[error("zero part or zero multiplicity in partition literal")]
    ZeroEntry,

    #[error("partition weight exceeds the supported limit of {limit}")]
    WeightLimit { limit: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("partition ({partition}) is not in domain {domain}")]
    NotInDomain { partition: String, domain: String },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant term {0} is not a unit")]
    NonUnitConstant(String),

    #[error("{method} is not available for {stat}")]
    UnsupportedMethod { method: String, stat: String },
}

pub type Result<T> = std::result::Result<T, Error>;
