use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

/// Everything that ends a command with exit status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{origin}:{line}:{column}: {message}")]
    Parse { origin: String, line: usize, column: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] upkernel::Error),
}

impl CliError {
    pub fn parse(origin: &str, e: &serde_json::Error) -> Self {
        // serde_json appends " at line L column C"; the position is reported separately
        let full = e.to_string();
        let message = full.rsplit_once(" at line ").map_or(full.as_str(), |(m, _)| m).to_string();
        CliError::Parse { origin: origin.to_string(), line: e.line(), column: e.column(), message }
    }
}
