use thiserror::Error;

/// Errors surfaced by constructions, certifiers and the amplification
/// pipeline. The CLI maps these onto its exit-code contract: input and
/// precondition failures are exit 2, exhausted budgets exit 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition unmet: {0}")]
    Precondition(String),

    /// An inequality from a proof-level derivation failed after integer
    /// rounding. Carries the inequality's name so the caller can tell which
    /// step of a pipeline broke.
    #[error("inequality `{name}` failed: {detail}")]
    Inequality { name: String, detail: String },

    #[error("search budget exceeded: explored {explored} of {limit} nodes")]
    Budget { explored: u64, limit: u64 },

    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("witness failed re-verification: {0}")]
    WitnessInvalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn inequality(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Inequality {
            name: name.into(),
            detail: detail.into(),
        }
    }
}
