use thiserror::Error;

/// Errors produced by the library.
///
/// Variants split into two families: rejected input (bad labels, malformed
/// files, unusable parameters) and internal self-check failures that signal a
/// bug rather than a condition the caller can repair.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: u32, n: u32 },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("{{{u},{v}}} is not an edge of the tree")]
    NotAnEdge { u: u32, v: u32 },

    #[error("a tree on a single vertex has no code")]
    NoPrueferCode,

    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("pattern must have at least one edge here: a single-vertex pattern packs into any n-vertex graph in exactly 2^n ways")]
    SingleVertexPattern,

    #[error("index must be at least 1, got {0}")]
    IndexOutOfRange(i64),

    #[error(
        "oracle cap exceeded: {copies} pattern copies > cap {cap} (set FMATCH_ORACLE_CAP to raise)"
    )]
    OracleCapExceeded { copies: usize, cap: usize },

    #[error("construction self-check failed: {0}")]
    ConstructionBug(String),

    #[error(
        "zero-residue search exceeded {0} steps; the recurrence guarantees this cannot happen"
    )]
    ResidueSearchExceeded(u128),

    #[error("invalid pattern {0:?}: expected vertex | edge | path:<k> | star:<k> | file:<path>")]
    BadPattern(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that indicate an internal invariant violation rather
    /// than rejected input. The CLI maps these to a distinct exit code.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            Error::ConstructionBug(_)
                | Error::ResidueSearchExceeded(_)
                | Error::OracleCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
