use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("operation needs at least {needed} vertices, graph has {actual}")]
    TooFewVertices { needed: usize, actual: usize },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("a set of at least {needed} vertices is required, got {actual}")]
    SetTooSmall { needed: usize, actual: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
