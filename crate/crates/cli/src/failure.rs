use std::fmt;
use std::process::ExitCode;

/// Errors that end the process with a documented exit status.
#[derive(Debug)]
pub enum Failure {
    /// Input read correctly but rejected: exit 2.
    Invalid(String),
    /// Input could not be read or parsed: exit 3.
    Parse(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Invalid(_) => ExitCode::from(2),
            Failure::Parse(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invalid(m) => write!(f, "invalid input: {m}"),
            Failure::Parse(m) => write!(f, "cannot read input: {m}"),
        }
    }
}

pub type Outcome<T> = Result<T, Failure>;
