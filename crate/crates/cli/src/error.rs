use serde_json::Value;
use thiserror::Error;

/// Command failure, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{}: {source}", .source.kind_name())]
    Geometry {
        #[from]
        source: polymix::Error,
    },
    /// An inequality came out violated. The payload is the counterexample bundle.
    #[error("inequality violated")]
    Violation(Box<Value>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Geometry { .. } => 3,
            CliError::Violation(_) => 4,
        }
    }
}
