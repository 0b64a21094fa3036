use std::path::PathBuf;

use assocsort_core::SortError;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Sort(#[from] SortError),
    #[error("verification failed: {0}")]
    Verify(String),
}

impl AppError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> AppError {
        AppError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 for duplicate keys, 3 for capacity overflow,
    /// 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Sort(SortError::DuplicateKey { .. }) => 2,
            AppError::Sort(SortError::CapacityExceeded { .. }) => 3,
            _ => 1,
        }
    }
}
