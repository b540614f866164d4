use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("input contains no edges")]
    EmptyInput,
    #[error("node {node} out of range (graph has {n} nodes)")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("community member set is empty")]
    EmptyCommunity,
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("partition is missing node {label}")]
    MissingNode { label: String },
    #[error("need at least {needed} observations, got {got}")]
    TooFewObservations { needed: usize, got: usize },
    #[error("series is constant (zero variance)")]
    ConstantSeries,
    #[error("degree sequence is degenerate (zero log-spread in tail)")]
    DegenerateDegrees,
    #[error("coordinate {value} outside [0, 1]")]
    CoordinateRange { value: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
