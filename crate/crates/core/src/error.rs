use thiserror::Error;

/// Errors produced by graph construction, orientation and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not bridgeless ({0}); a connected graph has an orientation of finite diameter only if it has no bridge")]
    Bridge(String),

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "orientation check failed: distance from {from} to {to} is {distance}, bound is {bound}"
    )]
    Verification {
        from: usize,
        to: usize,
        distance: String,
        bound: usize,
    },

    #[error("edge {u}-{v} is demanded in both directions")]
    Conflict { u: usize, v: usize },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("all orientation strategies exhausted: {0}")]
    Exhaustion(String),

    #[error("cap exceeded: {0}")]
    Cap(String),

    #[error("sampling failed: {0}")]
    Sampling(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
