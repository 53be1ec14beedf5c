use std::io;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qng_core::Error),
    #[error("{path}: {source}")]
    File { path: String, source: io::Error },
    #[error("output failed: {0}")]
    Output(String),
}

impl CliError {
    pub fn io(path: &Path, source: io::Error) -> Self {
        CliError::File { path: path.display().to_string(), source }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
