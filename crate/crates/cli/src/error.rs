use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Schema(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Lct(#[from] lctkit::Error),
}

impl CliError {
    pub fn schema(msg: impl std::fmt::Display) -> Self {
        CliError::Schema(msg.to_string())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// 2 for schema and validation failures, 3 for aliasing, 4 for
    /// degenerate parameters, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use lctkit::Error as E;
        match self {
            CliError::Schema(_) => 2,
            CliError::Io { .. } => 1,
            CliError::Lct(e) => match e {
                E::InvalidGrid(_) | E::InvalidSignal(_) | E::InvalidParameter(_) | E::Inapplicable(_) => 2,
                E::AliasingRisk(_) => 3,
                E::Degenerate(_) => 4,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
