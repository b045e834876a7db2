use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{col}: parse error: {msg}")]
    Parse { path: String, line: usize, col: usize, msg: String },
    #[error("{path}:{line}: validation error: {msg}")]
    Validation { path: String, line: usize, msg: String },
    #[error("unresolved name: {0}")]
    Unresolved(String),
    #[error("unknown command: {0}")]
    UnknownCommand(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] stabcat::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;
