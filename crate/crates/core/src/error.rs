use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroundError {
    #[error("node labels must be non-empty")]
    EmptyLabel,
    #[error("duplicate node `{0}`")]
    DuplicateLabel(String),
    #[error("unknown node `{0}`")]
    UnknownLabel(String),
    #[error("at most {0} nodes are supported")]
    TooManyNodes(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ground(#[from] GroundError),

    #[error("loop at node `{0}`: edges must join distinct nodes")]
    Loop(String),

    #[error("illegal multi-edge between `{0}` and `{1}`: a chain mixed graph only allows an arc together with a line or with one arrow")]
    IllegalMultiEdge(String, String),

    #[error("node `{0}` appears in more than one of the argument sets")]
    Overlap(String),

    #[error("{0} set must be non-empty")]
    EmptySet(&'static str),

    #[error("the graph is not anterial: {0}")]
    NotAnterial(String),

    #[error("the graph must contain only lines")]
    NotUndirected,

    #[error("nodes `{0}` and `{1}` are adjacent")]
    Adjacent(String, String),

    #[error("node sets differ")]
    GroundMismatch,

    #[error("{what} has {actual}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),

    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),

    #[error("preorder has a non-trivial equivalence class containing `{0}` and `{1}`")]
    NotAnOrder(String, String),

    #[error("class order is cyclic: the classes of `{0}` and `{1}` lie below each other")]
    CyclicOrder(String, String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(String, String),

    #[error("matrix is not positive definite: leading principal minor of order {order} is {value}")]
    NotPositiveDefinite { order: usize, value: String },

    #[error("matrix is singular")]
    Singular,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
