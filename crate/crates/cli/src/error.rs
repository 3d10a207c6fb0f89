use entangler_core::Error as CoreError;
use serde::Serialize;
use thiserror::Error;

/// A failed command, carrying the exit code the shell sees.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input files.
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    NotUnitary(String),
    /// Gate outside the regime a command needs (not entangling, perfect
    /// entangler where one is not allowed, ...).
    #[error("{0}")]
    Regime(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::NotUnitary(_) => 3,
            CliError::Regime(_) => 4,
            CliError::Internal(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::NotUnitary(_) => "not_unitary",
            CliError::Regime(_) => "regime",
            CliError::Io(_) => "io",
            CliError::Internal(_) => "internal",
        }
    }

    /// The JSON document written to standard error.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            error: &'a str,
            exit_code: i32,
            message: String,
        }
        crate::json::render(&Doc {
            error: self.kind(),
            exit_code: self.exit_code(),
            message: self.to_string(),
        })
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::NotUnitary { .. } => CliError::NotUnitary(msg),
            CoreError::NotEntangling { .. }
            | CoreError::OutOfRegime(_)
            | CoreError::AlreadyMaximal { .. }
            | CoreError::DegenerateCore { .. }
            | CoreError::NotMaximallyEntangled { .. } => CliError::Regime(msg),
            CoreError::NonFinite
            | CoreError::NotNormalized { .. }
            | CoreError::BadBudget(_)
            | CoreError::TargetOutOfRange { .. } => CliError::Parse(msg),
            CoreError::NotMagicDiagonal { .. }
            | CoreError::ConcurrenceMismatch { .. }
            | CoreError::BudgetExhausted { .. } => CliError::Internal(msg),
        }
    }
}
