use thiserror::Error;

use crate::graph::{ProblemKind, Vertex};
use crate::harness::BoundViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("header declares {declared} edges but {found} were read")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("vertex sets over different universes ({left} vs {right} vertices)")]
    UniverseMismatch { left: usize, right: usize },

    #[error("graph on {n} vertices exceeds the exact solver cap of {cap}")]
    SolverCap { n: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("set is not a feasible solution for {0}")]
    Infeasible(ProblemKind),

    #[error("approximation ratio undefined for optimum {opt} and value {achieved}")]
    UndefinedRatio { opt: usize, achieved: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid experiment config: {0}")]
    Config(String),

    #[error("all {skipped} instances were skipped")]
    AllSkipped { skipped: usize },

    #[error("{0}")]
    BoundViolation(Box<BoundViolation>),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
