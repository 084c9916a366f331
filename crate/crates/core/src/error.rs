use thiserror::Error;

/// Errors produced by ring construction, coding operations, and searches.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial must be monic with constant term 1")]
    NotMonic,

    #[error("polynomial is not primitive (root order {found}, expected {expected})")]
    NotPrimitive { found: u64, expected: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("element is a zero divisor and has no inverse")]
    ZeroDivisor,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("element is not a nonzero member of the Teichmuller set")]
    NotTeichmuller,

    #[error("degenerate support: {0}")]
    DegenerateSupport(String),

    #[error("support does not satisfy the case relation: {0}")]
    RelationNotSatisfied(String),

    #[error("word is not a codeword")]
    NotACodeword,

    #[error("budget exceeded: {needed} candidates, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
