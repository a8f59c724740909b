use crate::law::LawReport;
use crate::scalar::ScalarError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("malformed structure: {0}")]
    Structure(String),
    #[error("structure has no {0}")]
    Missing(&'static str),
    /// A required condition failed; the report carries the witnesses.
    #[error("precondition failed: {what}")]
    Precondition { what: String, report: Option<Box<LawReport>> },
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
    /// An invariant the library guarantees was violated.
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn precondition(what: impl Into<String>, report: LawReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report: Some(Box::new(report)),
        }
    }

    pub fn condition(what: impl Into<String>) -> Self {
        Error::Precondition {
            what: what.into(),
            report: None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
