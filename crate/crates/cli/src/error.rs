use spdc_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid {key}: {reason}")]
    Validation { key: String, reason: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("optimization infeasible: {0}")]
    Infeasible(String),
}

impl CliError {
    pub fn validation(key: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Validation {
            key: key.into(),
            reason: reason.into(),
        }
    }

    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation { .. } => 3,
            CliError::Io(_) => 4,
            CliError::Infeasible(_) => 5,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Infeasible(msg) => CliError::Infeasible(msg),
            CoreError::Invalid { key, reason } => CliError::Validation { key, reason },
            other => CliError::Validation {
                key: "configuration".into(),
                reason: other.to_string(),
            },
        }
    }
}
