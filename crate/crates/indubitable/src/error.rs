//! Crate-wide error type.
//!
//! Errors are grouped into four kinds so the CLI can map them onto distinct
//! exit codes: input/parse problems, violated preconditions, structural or
//! consistency violations (things the underlying theory forbids, so they
//! signal a bug or numerical breakdown rather than bad input), and solver
//! failures.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("graph6: {msg} (byte offset {offset})")]
    Graph6 { msg: String, offset: usize },

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("invalid family spec: {0}")]
    Family(String),

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not regular")]
    NotRegular,

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A two-valued idempotent whose 01 part fails the equivalence-relation
    /// structure. Forbidden for exact spectral idempotents, so this points at
    /// numerical trouble rather than at the graph.
    #[error("structural violation: {0}")]
    Structural(String),

    /// A combinatorial check disagreed with the spectral route. The theory
    /// equates the two, so this should never fire on correct code.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("eigensolver failure: {0}")]
    Eigen(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Consistency,
    Solver,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Graph6 { .. } | EdgeList(_) | Family(_) | Partition(_) => ErrorKind::Parse,
            VertexOutOfRange { .. } | SelfLoop(_) | Disconnected | NotRegular
            | Precondition(_) => ErrorKind::Precondition,
            Structural(_) | Consistency(_) => ErrorKind::Consistency,
            Eigen(_) => ErrorKind::Solver,
        }
    }

    /// Exit code for the CLI: 0 is success, 2 parse failure, 3 precondition
    /// failure, 4 internal consistency error, 5 solver failure.
    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            ErrorKind::Parse => 2,
            ErrorKind::Precondition => 3,
            ErrorKind::Consistency => 4,
            ErrorKind::Solver => 5,
        }
    }
}
