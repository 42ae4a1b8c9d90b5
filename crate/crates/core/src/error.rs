use std::path::PathBuf;

use crate::coxeter::Partition;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The class `C_lambda(n)` does not exist because `|lambda| + len(lambda) > n`.
    #[error("class {lambda} is empty in S_{n}")]
    EmptyClass { lambda: Partition, n: usize },

    #[error(transparent)]
    Solve(#[from] SolveError),

    #[error("construction of G[{lambda}] in H_{n} failed: {reason}")]
    Construction {
        lambda: Partition,
        n: usize,
        reason: String,
    },

    #[error("element is not in the span of the materialized basis (n = {n}, up_to = {up_to})")]
    BasisIncomplete { n: usize, up_to: usize },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("malformed document: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("rank-deficient system: rank {rank}, need {needed}")]
    RankDeficient { rank: usize, needed: usize },
    #[error("inconsistent system (rank {rank})")]
    Inconsistent { rank: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
