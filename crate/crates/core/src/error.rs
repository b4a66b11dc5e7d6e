use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {dim} out of range 1..={cap} for {kind}")]
    DimensionOutOfRange {
        kind: &'static str,
        dim: usize,
        cap: usize,
    },
    #[error("face dimension {k} out of range 0..={max}")]
    FaceDimensionOutOfRange { k: usize, max: usize },
    #[error("face does not belong to this polytope")]
    FaceMismatch,
    #[error("face has no unique source and sink")]
    NoUniqueSourceSink,
    #[error("orientation has a directed cycle: {0:?}")]
    Cyclic(Vec<usize>),
    #[error("expected a {expected} orientation")]
    WrongPolytope { expected: &'static str },
    #[error("malformed pair sequence: {0}")]
    MalformedSequence(String),
    #[error("pair index {index} out of range for sequence of length {len}")]
    PairIndexOutOfRange { index: usize, len: usize },
    #[error("cannot eliminate a pair from a sequence of length 1")]
    EliminateSingleton,
    #[error("BadSequence break k={break_k}")]
    BadSequence { break_k: usize },
    #[error("free-bit vector has length {got}, expected {expected}")]
    FreeBitsLength { got: usize, expected: usize },
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("tied first coordinates at vertices {0} and {1}")]
    TiedObjective(usize, usize),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("invalid realization: {0}")]
    InvalidRealization(String),
    #[error("invalid facet ordering: {0}")]
    InvalidOrdering(String),
    #[error("exhaustive enumeration limited to d <= {cap}, got {d}")]
    TooLargeForCensus { d: usize, cap: usize },
    #[error("invalid constant: {0}")]
    InvalidConstant(String),
    #[error("no crossover found up to n = {cap}")]
    CrossoverCapExceeded { cap: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
