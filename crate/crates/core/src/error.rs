use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a directed cycle through `{0}`")]
    CycleDetected(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("sequence is not a linear extension of the upset: {0}")]
    NotAnUpsetExtension(String),
    #[error("index {index} out of range 1..={modulus}")]
    IndexOutOfRange { index: usize, modulus: usize },
    #[error("order {order} is below the minimum {min} for this family")]
    OrderTooSmall { order: usize, min: usize },
    #[error("search budget exceeded ({0})")]
    BudgetExceeded(String),
    #[error("edge {from} -> {to} does not enter `{at}`")]
    EdgeDoesNotEnter {
        from: String,
        to: String,
        at: String,
    },
    #[error("embedding has no e_infinity half-edge")]
    MissingEInfinity,
    #[error("path is not anchored at the e_infinity vertex")]
    PathNotAnchored,
    #[error("path does not separate the plane: {0}")]
    PathNotSeparating(String),
    #[error("witnessing paths intersect at interior vertex `{0}`")]
    PathsIntersect(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("no peak: no element of the extreme path of `{b}` lies above `{a}`")]
    NoPeak { a: String, b: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("no computed embedding places `{0}` on the outer face")]
    EmbeddingConstraintUnsatisfied(String),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Format(e.to_string())
    }
}
