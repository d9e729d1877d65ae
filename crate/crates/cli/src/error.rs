use thiserror::Error;

use pancake_core::instance::InstanceError;
use pancake_core::pseudodisk::PseudodiskError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    /// The computation finished but its output failed verification.
    #[error("verification failed: {0}")]
    Finding(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
            CliError::Finding(_) => 4,
        }
    }
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        match e {
            InstanceError::Pseudodisk(p) => p.into(),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PseudodiskError> for CliError {
    fn from(e: PseudodiskError) -> Self {
        if e.is_degenerate() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("i/o: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(format!("json: {e}"))
    }
}
