use thiserror::Error;

/// Failures of a command, each tied to a fixed process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable input, malformed JSON, bad flag values.
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("{0}")]
    Cap(latred_core::Error),
    #[error("{0}")]
    Internal(latred_core::Error),
    #[error("write failed: {0}")]
    Io(String),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;
/// `verify` found a word on which the automata differ.
pub const EXIT_NOT_EQUIVALENT: u8 = 5;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<latred_core::Error> for CliError {
    fn from(e: latred_core::Error) -> Self {
        if e.is_cap() {
            CliError::Cap(e)
        } else if e.is_internal() {
            CliError::Internal(e)
        } else {
            CliError::Validation(e.to_string())
        }
    }
}
