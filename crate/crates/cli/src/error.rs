use std::path::PathBuf;

use crate::scenario::ParseError;

/// Top-level failure classes, each mapped to a distinct process exit code so
/// scripts can tell a bad scenario from a numerical breakdown from a disk
/// problem.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("numerical failure: {0}")]
    Numerical(#[from] nullsteer::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for scenario problems, 3 for numerical failures, 4 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
