use thiserror::Error;

use crate::embed::Separator;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input at line {line}: {msg}")]
    MalformedInput { line: usize, msg: String },
    #[error("not a simple graph: {0}")]
    NotSimple(String),
    #[error("vertex {u} lists {v} as a neighbor but {v} does not list {u}")]
    AsymmetricAdjacency { u: usize, v: usize },
    #[error("rotation system is not a sphere embedding: n={n}, e={e}, f={f}")]
    EulerViolation { n: usize, e: usize, f: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("planar_code input does not start with >>planar_code<<")]
    BadHeader,
    #[error("planar_code record {index} is truncated")]
    TruncatedRecord { index: usize },
    #[error("graph has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("graph is not essentially 4-connected (non-trivial separator {0:?})")]
    NotEssentially4Connected(Separator),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("cycle edge {x}-{y} has no common neighbor {v} off the cycle")]
    NotExtendable { x: usize, y: usize, v: usize },
    #[error("a side of the cycle is empty")]
    EmptySide,
    #[error("cycle has an extendable edge {0}-{1}")]
    ExtendableEdgePresent(usize, usize),
    #[error("{count} minor faces are below 10/3")]
    ViolationsPresent { count: usize },
    #[error("no recipe matches face {face}")]
    Unmatched { face: usize },
    #[error("recipe {case_id} reached a closed branch on face {face}")]
    Contradiction { case_id: String, face: usize },
    #[error("invalid extension step ({case_id}): {msg}")]
    InvalidStep { case_id: String, msg: String },
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("node budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("graph is not a triangulation")]
    NotTriangulation,
    #[error("constructed graph failed its post-check (separator {0:?})")]
    PostCheckFailed(Separator),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that can only come from a broken invariant or a
    /// transcription bug, never from well-formed input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::Contradiction { .. } | Error::InvalidStep { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
