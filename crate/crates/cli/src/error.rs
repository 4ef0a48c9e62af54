use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed flags or parameters.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] triad_core::Error),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    /// 2 for usage errors, 1 for failed mathematical preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_usage() => 2,
            _ => 1,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}
