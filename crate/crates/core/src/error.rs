use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated within one cycle")]
    RepeatedPoint(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("element is not in the group: {0}")]
    NotInGroup(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("order mismatch: header says {expected}, computed {computed}")]
    OrderMismatch { expected: u128, computed: u128 },
    #[error("matrix is singular")]
    Singular,
    #[error("not transitive")]
    Intransitive,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("missing data file: {0}")]
    MissingData(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
