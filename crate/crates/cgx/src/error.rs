use std::fmt;

use num_bigint::BigUint;

use crate::rule::Violation;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The spacing `d` is not a positive even integer.
    UnsupportedInterval { d: u64 },
    /// A sequence index was 0; the sequences here are 1-indexed.
    IndexMustBePositive,
    /// A malformed digit-string literal.
    InvalidDigitString(String),
    /// An operation that requires a rule-abiding sequence was handed one
    /// that breaks the rule.
    InvalidInput(Violation),
    /// The digit string does not split into blocks; `position` is the
    /// 1-based index at which the trailing-block scan got stuck.
    NotDecomposable { position: usize },
    /// An exhaustive check would enumerate more sequences than the
    /// configured desk-scale limit allows.
    DeskScaleExceeded { expected: BigUint, limit: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedInterval { d } => {
                write!(f, "interval must be even and positive (got {d})")
            }
            Error::IndexMustBePositive => write!(f, "sequence index must be at least 1"),
            Error::InvalidDigitString(msg) => write!(f, "invalid digit string: {msg}"),
            Error::InvalidInput(v) => write!(f, "sequence breaks the rule: {v}"),
            Error::NotDecomposable { position } => {
                write!(f, "not decomposable into blocks (stuck at index {position})")
            }
            Error::DeskScaleExceeded { expected, limit } => {
                write!(
                    f,
                    "enumeration of {expected} sequences exceeds the desk-scale limit {limit}"
                )
            }
        }
    }
}

impl std::error::Error for Error {}
