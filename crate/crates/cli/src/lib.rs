//! Batch driver: resolve a job file, run the requested analyses, build a report.

pub mod config;
pub mod report;

use std::fmt;

use foldlab_core::Error;

pub use config::{parse, JobConfig};
pub use report::{run, Analysis, Options, Report};

/// Exit codes of the binary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitKind {
    Parse = 2,
    InvalidAction = 3,
    Resource = 4,
    Mismatch = 5,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub kind: ExitKind,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { kind: ExitKind::Parse, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        self.kind as i32
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::InvalidDatum(_) | Error::Domain(_) => ExitKind::Parse,
            Error::InvalidAction(_) => ExitKind::InvalidAction,
            Error::Resource(_) => ExitKind::Resource,
            Error::Internal(_) => ExitKind::Mismatch,
        };
        CliError { kind, message: e.to_string() }
    }
}
