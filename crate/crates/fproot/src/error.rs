use thiserror::Error;

/// Failures the command line reports, each with its own exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Io { .. } => 1,
            CliError::Invariant(_) => 4,
        }
    }
}

/// Exit status for a run that hit a budget and wrote a partial result.
pub const EXIT_BUDGET: i32 = 3;
