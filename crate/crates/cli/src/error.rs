use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot parse {path}: {msg}")]
    Parse { path: PathBuf, msg: String },
    #[error("invalid {field}: {msg}")]
    Invalid { field: &'static str, msg: String },
    #[error("search space of {size} candidates exceeds the exhaustive limit {limit}")]
    SearchSpaceTooLarge { size: u128, limit: u64 },
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Core(#[from] tgrs_core::Error),
}

impl CliError {
    pub fn invalid(field: &'static str, msg: impl Into<String>) -> CliError {
        CliError::Invalid { field, msg: msg.into() }
    }
}
