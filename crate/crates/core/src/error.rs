//! Crate-wide error type.

use crate::kt_decomp::MinorModel;

/// Errors produced by parsing, preconditions and verifiers.
///
/// [`Error::MinorFound`] is special: colouring routines surface the
/// certificate refuting their hypothesis through it, so callers can recover
/// the minor model instead of a colouring.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: self-loop {v} {v}")]
    ParseLoop { line: usize, v: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    ParseDuplicate { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex id out of range (n = {n})")]
    ParseOutOfRange { line: usize, n: usize },
    #[error("line {line}: malformed line {text:?}")]
    ParseMalformed { line: usize, text: String },

    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set does not induce a connected subgraph")]
    DisconnectedSet,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("instance too large for exhaustive search (n = {n}, cap = {cap})")]
    TooLarge { n: usize, cap: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("missing {0} metadata for the requested mode")]
    MissingMetadata(&'static str),
    #[error("invalid minor model: {0}")]
    InvalidModel(String),

    #[error("layered tree decomposition does not cover the graph: {0}")]
    LtdCoverage(String),
    #[error("layered tree decomposition violates the subtree property: {0}")]
    LtdSubtree(String),
    #[error("layered tree decomposition exceeds its declared layered width: {0}")]
    LtdWidth(String),
    #[error("invalid layering: {0}")]
    LtdLayering(String),

    #[error("cut bound violated at tree edge ({0}, {1})")]
    CutBoundViolated(usize, usize),
    #[error("anchor ({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("{} minor found; requested colouring does not apply", .0.pattern)]
    MinorFound(Box<MinorModel>),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Extract the certificate carried by [`Error::MinorFound`], if any.
    pub fn into_minor_model(self) -> Option<MinorModel> {
        match self {
            Error::MinorFound(m) => Some(*m),
            _ => None,
        }
    }
}
