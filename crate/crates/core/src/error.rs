use thiserror::Error;

/// Errors reported by the solver and reduction routines.
///
/// Precondition violations (wrong graph class, weighted input to an
/// unweighted algorithm, parameter over a limit) are errors, never panics:
/// callers pick the algorithm, so they must be able to recover.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("empty representation")]
    EmptyRepresentation,

    #[error("gamma too large for reference DP: gamma={gamma}, limit={limit}")]
    GammaTooLarge { gamma: u32, limit: u32 },

    #[error("Q too large for subset DP: measured Q={q}, limit={limit}")]
    QTooLarge { q: u32, limit: u32 },

    #[error("mismatched vertex counts: {left} vs {right}")]
    MismatchedVertexCount { left: usize, right: usize },

    #[error("vertex {vertex} has an empty color list")]
    EmptyColorList { vertex: usize },

    #[error("{op} requires singleton color lists")]
    RequiresSingletonColors { op: &'static str },

    #[error("{op} requires unit weights")]
    RequiresUnitWeights { op: &'static str },

    #[error("{op} requires a proper interval representation")]
    RequiresProperRep { op: &'static str },

    #[error("{op} requires cluster graphs on both sides")]
    RequiresClusterGraphs { op: &'static str },

    #[error("instance too large for exhaustive oracle: n={n}, limit={limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("total weight exceeds the 64-bit value range")]
    WeightOverflow,

    #[error("recoloring must map all {expected} colors, got {got}")]
    BadRecoloring { expected: usize, got: usize },

    #[error("malformed formula: {0}")]
    MalformedFormula(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
