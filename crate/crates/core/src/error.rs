use thiserror::Error;

use crate::visibility::Variant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is disconnected: no path between {u} and {v}")]
    DisconnectedGraph { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VisibilityError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("graph has {n} vertices, above the exhaustive limit of {limit} (lemma-assisted mode may help)")]
    GraphTooLarge { n: usize, limit: usize },
    #[error("variant {0} is not supported by this operation")]
    UnsupportedVariant(Variant),
    #[error("inclusion-exclusion over {maximal} maximal sets exceeded the term budget")]
    TooManyMaximalSets { maximal: usize },
    #[error("cover member {index} is not convex")]
    NonConvexCoverMember { index: usize },
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("lemma-assisted search is disabled in the enumeration limits")]
    LemmaAssistedDisabled,
    #[error("graph is not geodetic")]
    NotGeodetic,
    #[error("invalid enumeration limits: {0}")]
    InvalidLimits(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl EnumerationError {
    /// Whether the failure is a resource limit rather than a usage error.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            EnumerationError::GraphTooLarge { .. }
                | EnumerationError::TooManyMaximalSets { .. }
                | EnumerationError::SearchSpaceTooLarge(_)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid construction parameters: {0}")]
    InvalidParams(String),
    #[error("family {0} has no designated witness set")]
    UnsupportedFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("parameter out of range: {0}")]
    OutOfRangeParam(String),
    #[error("generalized binomial undefined for x = {x} < k = {k}")]
    DomainError { x: f64, k: u32 },
    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,
    #[error("invalid coefficient {0:?}")]
    InvalidCoefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
