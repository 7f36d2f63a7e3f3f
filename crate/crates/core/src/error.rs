use thiserror::Error;

use crate::refine::RefinementViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("sets overlap in vertex {vertex}")]
    OverlappingSets { vertex: usize },

    #[error("{0} must not be empty")]
    EmptySet(&'static str),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The graph exceeds a hard limit of the exact oracle.
    #[error("{what}: {n} vertices exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("longest-path enumeration exceeded the cap of {cap} paths")]
    PathCapExceeded { cap: usize },

    #[error("anchors are not contained in the region (vertex {vertex})")]
    AnchorsOutsideRegion { vertex: usize },

    #[error("graph is not connected")]
    Disconnected,

    /// Class-membership failure; `witness` lists the offending vertices
    /// (typically an induced copy of a forbidden pattern).
    #[error("graph is not {class}; witness {witness:?}")]
    NotInClass { class: String, witness: Vec<usize> },

    #[error("vertex {vertex} is not dominated")]
    NotDominated { vertex: usize },

    #[error("refinement hypothesis violated: {0}")]
    Hypothesis(#[from] RefinementViolation),

    /// A guaranteed object was not found. This is a bug or a broken
    /// precondition, never an expected outcome.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("invalid representation: {0}")]
    Representation(String),

    #[error("invalid tree decomposition: {0}")]
    TreeDecomposition(String),

    /// Rejection sampling ran out of attempts.
    #[error("no accepted sample within {attempts} attempts")]
    BudgetExhausted { attempts: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
