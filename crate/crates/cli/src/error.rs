use cklein_core::element::{Overflow, ParseElementError};
use cklein_core::moves::MoveError;
use cklein_core::oracle::OracleError;
use cklein_core::word::ParseWordError;
use cklein_core::young::YoungError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    AuditFailed(String),
}

impl CliError {
    /// 2 parse, 3 resource, 4 I/O, 5 audit failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Io(_) => 4,
            CliError::AuditFailed(_) => 5,
        }
    }
}

impl From<ParseWordError> for CliError {
    fn from(e: ParseWordError) -> Self {
        CliError::Parse(format!("invalid word: {e}"))
    }
}

impl From<ParseElementError> for CliError {
    fn from(e: ParseElementError) -> Self {
        CliError::Parse(format!("invalid element: {e}"))
    }
}

impl From<YoungError> for CliError {
    fn from(e: YoungError) -> Self {
        match e {
            YoungError::Overflow(o) => o.into(),
            e => CliError::Parse(format!("cannot decompose word: {e}")),
        }
    }
}

impl From<Overflow> for CliError {
    fn from(e: Overflow) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<MoveError> for CliError {
    fn from(e: MoveError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Io(std::io::Error::other(format!("{other:?}"))),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}
