use thiserror::Error;

/// Errors raised by structure constructors, operations, and codecs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for base size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex subset {mask:#b} not contained in base of size {n}")]
    SubsetOutOfRange { mask: u64, n: usize },

    #[error("base size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("structure kind or parameter mismatch: {left} vs {right}")]
    KindMismatch { left: String, right: String },

    #[error("{what}: size {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("operation requires a nonempty base")]
    EmptyStructure,

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("edge probability {0} must lie in [0, 1]")]
    InvalidProbability(f64),

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("json: {0}")]
    Json(String),
}

/// Decoding/encoding failures for the graph6 text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,

    #[error("long-form size header (n > 62) is not supported")]
    UnsupportedLongForm,

    #[error("invalid header byte {byte:#04x}")]
    InvalidHeader { byte: u8 },

    #[error("invalid body byte {byte:#04x} at offset {offset}")]
    InvalidBody { byte: u8, offset: usize },

    #[error("truncated body: expected {expected} bytes after header, found {found}")]
    Truncated { expected: usize, found: usize },

    #[error("trailing data: expected {expected} bytes after header, found {found}")]
    TrailingData { expected: usize, found: usize },

    #[error("nonzero padding bits in final body byte")]
    NonzeroPadding,

    #[error("vertex count {n} exceeds the short-form limit of 62")]
    TooLarge { n: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
