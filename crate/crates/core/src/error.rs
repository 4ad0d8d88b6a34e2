use thiserror::Error;

/// Errors produced while building tables, diagrams and invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input does not describe a well-formed table (jagged rows,
    /// entries out of range, wrong shape). Distinct from axiom failures,
    /// which are reported through a `ValidationReport`.
    #[error("malformed table: {0}")]
    Structure(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid diagram: {0}")]
    Diagram(String),

    #[error("unknown builtin diagram `{0}`")]
    UnknownBuiltin(String),

    #[error("element set is empty")]
    EmptySet,

    #[error("element {element} is out of range 1..={order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("element set is not closed: {0}")]
    NotClosed(String),

    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
