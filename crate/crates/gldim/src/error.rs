use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("resource limit exceeded: {0}")]
    Limit(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    /// 2 for bad input, 3 for exceeded bounds.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io { .. } => 2,
            CliError::Limit(_) => 3,
        }
    }
}

impl From<gldim_core::Error> for CliError {
    fn from(e: gldim_core::Error) -> Self {
        match e {
            gldim_core::Error::InvalidInput(m) => CliError::Invalid(m),
            gldim_core::Error::ResourceLimit(m) => CliError::Limit(m),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
