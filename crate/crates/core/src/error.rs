use thiserror::Error;

use crate::axioms::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A precondition was violated; the message carries the certificate.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation is undefined or undecidable on this input.
    #[error("refused: {0}")]
    Refused(String),

    /// A presentation failed its own axioms, so it cannot be converted.
    #[error("axioms failed:\n{0}")]
    AxiomsFailed(Box<AxiomReport>),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn refused(msg: impl Into<String>) -> Self {
        Error::Refused(msg.into())
    }

    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }
}
