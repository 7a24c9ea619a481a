use thiserror::Error;

/// Failures that end a command, each with its own exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    pub fn usage(e: impl ToString) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn precondition(e: impl ToString) -> Self {
        CliError::Precondition(e.to_string())
    }
}
