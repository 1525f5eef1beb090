use thiserror::Error;

/// Errors raised by orbit, closed-form and analysis routines.
///
/// Indices are always in the shifted numbering, where the initial
/// conditions occupy positions `0..=9`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The denominator `A_n + B_n x_n x_{n+2} x_{n+4} x_{n+6} x_{n+8}` vanished,
    /// so the term at `index` is undefined.
    #[error("forbidden set: term {index} is undefined{}", block_suffix(*.block))]
    ForbiddenSet { index: usize, block: Option<usize> },

    /// A factor of the invariant `F_n` is zero at `index`.
    #[error("zero term at index {index}: invariant is undefined")]
    ZeroTerm { index: usize },

    #[error("coefficient table exhausted: index {index} requested, table has {len} rows")]
    CoefficientsExhausted { index: usize, len: usize },

    #[error("index {value} out of range (expected {expected})")]
    IndexOutOfRange { value: usize, expected: &'static str },

    #[error("horizon of {available} terms is too short, need at least {required}")]
    HorizonTooShort { available: usize, required: usize },

    #[error("orbit was truncated at index {index}")]
    TruncatedOrbit { index: usize },

    #[error("closed form {formula} disagrees with the general branch at block count {n}")]
    KnownCaseMismatch { formula: &'static str, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

fn block_suffix(block: Option<usize>) -> String {
    match block {
        Some(s) => format!(" (product block {s})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn forbidden(index: usize) -> Self {
        Error::ForbiddenSet { index, block: None }
    }

    pub(crate) fn forbidden_in_block(index: usize, block: usize) -> Self {
        Error::ForbiddenSet {
            index,
            block: Some(block),
        }
    }

    pub fn is_forbidden(&self) -> bool {
        matches!(self, Error::ForbiddenSet { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
