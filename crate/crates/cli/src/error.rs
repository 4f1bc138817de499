use std::path::PathBuf;

use thiserror::Error;

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {message}", path.display())]
    Output { path: PathBuf, message: String },

    #[error(transparent)]
    Core(#[from] twocolor::Error),
}

impl CliError {
    /// Process exit code: 2 for usage and validation errors, 3 for numeric
    /// failures, 1 for I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Io { .. } | CliError::Output { .. } => 1,
            CliError::Core(twocolor::Error::InvalidArgument(_)) => 2,
            CliError::Core(_) => 3,
        }
    }
}
