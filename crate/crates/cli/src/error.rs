use thiserror::Error;

/// Everything that ends a command early, with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{code} at {field}: {message}")]
    Invalid { code: &'static str, field: String, message: String },
    #[error("invalid environment variable {name}={value:?}")]
    Env { name: String, value: String },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("NotSupported: {0}")]
    NotSupported(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal defect: {0}")]
    Defect(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) | CliError::Defect(_) => 1,
            CliError::Io { .. } | CliError::Syntax { .. } | CliError::Invalid { .. } | CliError::Env { .. } => 2,
            CliError::Budget(_) => 3,
            CliError::NotSupported(_) => 4,
        }
    }

    /// Stable short name of the failure.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Syntax { .. } => "Syntax",
            CliError::Invalid { code, .. } => code,
            CliError::Env { .. } => "Env",
            CliError::Budget(_) => "BudgetExceeded",
            CliError::NotSupported(_) => "NotSupported",
            CliError::Verification(_) => "VerificationFailed",
            CliError::Defect(_) => "Defect",
        }
    }
}
