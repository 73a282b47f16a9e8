use std::fmt;

use thiserror::Error;

/// Which resource guard tripped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GuardKind {
    Degree,
    Time,
    Iterations,
}

impl fmt::Display for GuardKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GuardKind::Degree => write!(f, "degree"),
            GuardKind::Time => write!(f, "time"),
            GuardKind::Iterations => write!(f, "iteration"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("modulus {0} is not an odd prime below 2^31")]
    BadModulus(u64),
    #[error("unknown variable `{name}` at offset {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("coefficient {0} is not in the field")]
    CoefficientNotInField(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{guard} guard tripped: {detail}")]
    GuardAbort { guard: GuardKind, detail: String },
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,
    #[error("ideal is not a square-free monomial ideal")]
    NotSquareFreeMonomial,
    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub fn is_guard_abort(&self) -> bool {
        matches!(self, Error::GuardAbort { .. })
    }

    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax { position, message: message.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
