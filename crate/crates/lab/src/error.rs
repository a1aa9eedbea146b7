use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Core(#[from] cycle_bound_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl LabError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        LabError::Parse {
            line,
            message: message.into(),
        }
    }

    /// A parse error inside `path`, keeping the line number.
    pub fn in_file(self, path: &std::path::Path) -> Self {
        match self {
            LabError::Parse { line, message } => LabError::Parse {
                line,
                message: format!("{}: {message}", path.display()),
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
