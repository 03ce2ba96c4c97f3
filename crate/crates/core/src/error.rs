use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("atom p{atom} is outside a universe with {atoms} atoms")]
    UnknownAtom { atom: usize, atoms: usize },

    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),

    #[error("invalid universe: {0}")]
    InvalidUniverse(String),

    #[error("empty set where a non-empty set is required: {0}")]
    EmptySet(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("length bound violated: sequence needs histories of length {needed}, ranking covers {bound}")]
    BoundViolation { needed: usize, bound: usize },

    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("containment violated: {0}")]
    Containment(String),

    #[error("inconsistent observation: {0}")]
    Inconsistent(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error on line {line}: {msg}")]
    Format { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
