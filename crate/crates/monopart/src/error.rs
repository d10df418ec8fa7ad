use thiserror::Error;

/// Errors produced by the library. The CLI maps these onto exit codes:
/// precondition violations exit 2, internal contradictions exit 3, I/O
/// and parse failures exit 4.
#[derive(Debug, Error)]
pub enum Error {
    /// An exact solver was asked for an instance above its size cap.
    #[error("{what}: instance size {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    /// The input does not satisfy a documented precondition.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A theorem-guaranteed step failed. This signals a bug in the
    /// implementation (or a counterexample to the theorem) and is never
    /// silently handled.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A constrained random generator exhausted its retry budget.
    #[error("generation failed after {retries} retries: {reason}")]
    GenerationFailed { retries: usize, reason: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(msg.into())
    }

    pub fn contradiction(msg: impl Into<String>) -> Self {
        Error::InternalContradiction(msg.into())
    }

    /// Exit code for the CLI front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::PreconditionViolated(_) | Error::CapExceeded { .. } | Error::InvalidParams(_) => 2,
            Error::InternalContradiction(_) => 3,
            Error::Io(_) | Error::Parse { .. } | Error::Config(_) | Error::GenerationFailed { .. } => 4,
        }
    }
}
