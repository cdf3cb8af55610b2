use hodgesig_core::Error as CoreError;

/// Failures surfaced by the CLI. Exit codes: 1 invalid input, 2 internal
/// assertion, 3 resource bound exceeded.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags, an unusable configuration, or a payload off its schema.
    #[error("{0}")]
    Usage(String),
    /// Well-formed input that the mathematics rejects.
    #[error("{0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
    /// A structure check or internal consistency check failed.
    #[error("assertion failed: {0}")]
    Assertion(String),
    /// An enumeration bound or the precision ladder was exhausted.
    #[error("resource bound exceeded: {0}")]
    Bound(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Io(_) => 1,
            CliError::Assertion(_) => 2,
            CliError::Bound(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "invalid_input",
            CliError::Io(_) => "io",
            CliError::Assertion(_) => "assertion",
            CliError::Bound(_) => "resource_bound",
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::PrecisionExhausted { .. } => CliError::Bound(e.to_string()),
            CoreError::Internal(_) => CliError::Assertion(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
