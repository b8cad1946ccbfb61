//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("size guard exceeded: {what} = {got}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("alpha must lie in [0, 1), got {0}")]
    AlphaOutOfRange(String),

    #[error("{0} is not a vertex cover")]
    NotACover(String),

    #[error("not an alpha-partial vertex cover: covers {covered} of {required} required edges")]
    NotAPartialCover { covered: usize, required: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("coordinate {coord} out of range for arity {arity}")]
    CoordOutOfRange { coord: usize, arity: usize },

    #[error("restriction is inconsistent with the reference input at coordinate {0}")]
    InconsistentRestriction(usize),

    #[error("path position {pos} out of range 1..={len}")]
    PathPosition { pos: usize, len: usize },

    #[error("coordinate {0} repeated in path")]
    RepeatedCoordinate(usize),

    #[error("subtrees are not pairwise disjoint")]
    SubtreesNotDisjoint,

    #[error("no node at path {0:?}")]
    NoSuchNode(String),

    #[error("distribution masses sum to {got}, expected 1")]
    MassNormalization { got: String },

    #[error("distribution mass must be positive, got {0}")]
    NonPositiveMass(String),

    #[error("duplicate point in set: {0}")]
    DuplicatePoint(String),

    #[error("the reference input must belong to the point set")]
    ReferenceNotInSet,

    #[error("duplication count ell must be >= 1 here (use the unamplified builder for ell = 0)")]
    EllMustBePositive,

    #[error("graph must have at least one edge for this construction")]
    EmptyEdgeSet,

    #[error("tree disagrees with the required function on {0}")]
    AgreementViolation(String),

    #[error("distance precondition violated: {0}")]
    DistanceTooLarge(String),

    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),

    #[error("learner failed: {0}")]
    LearnerFailed(String),

    #[error("learner exceeded its time budget")]
    LearnerTimeout,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
