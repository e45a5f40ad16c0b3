use thiserror::Error;

use crate::witness::WitnessCertificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("row index {index} out of range for a graph with {m} rows")]
    RowOutOfRange { index: usize, m: usize },
    #[error("column index {index} out of range for a graph with {n} columns")]
    ColumnOutOfRange { index: usize, n: usize },
    #[error("row intersection needs two distinct rows, got {0} twice")]
    SameRow(usize),
    #[error("graph dimensions must be positive and at most {max}, got {m}x{n}")]
    BadDimensions { m: usize, n: usize, max: usize },
    #[error("expected {expected} rows, got {got}")]
    RowCount { expected: usize, got: usize },
    #[error("biclique sides must be positive, got K_{{{s},{t}}}")]
    EmptyPattern { s: usize, t: usize },
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("model decodes to an invalid coloring: {}", .0.report.violation_summary())]
    Integrity(Box<WitnessCertificate>),
    #[error("certificate for {0} failed re-verification")]
    Reverification(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
