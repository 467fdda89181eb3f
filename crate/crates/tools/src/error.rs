use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ToolError {
    /// Bad command line or sweep specification.
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Model(#[from] xxz_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("malformed table: {0}")]
    Parse(String),

    #[error("cannot render: {0}")]
    Render(String),
}

impl ToolError {
    pub fn usage(msg: impl Into<String>) -> Self {
        ToolError::Usage(msg.into())
    }

    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            ToolError::Usage(_) => 2,
            _ => 1,
        }
    }
}
