use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("duplicate vertex identifier `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge identifier `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` has non-positive length {length}")]
    NonPositiveEdgeLength { edge: String, length: f64 },
    #[error("edge `{edge}` names unknown endpoint `{vertex}`")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("graph is disconnected: `{0}` is unreachable from `{1}`")]
    DisconnectedGraph(String, String),
    #[error("point is not on the graph: {0}")]
    PointNotOnGraph(String),
    #[error("operation requires a nonempty point set")]
    EmptySet,
    #[error("operation requires a nonempty region")]
    EmptyRegion,
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),
    #[error("simple loop enumeration exceeded the cap of {0} loops")]
    LoopCountGuardExceeded(usize),
    #[error("relation is not a correspondence: {0}")]
    NotACorrespondence(String),
    #[error("search needs {required} evaluations, guard allows {guard}")]
    GuardExceeded { required: f64, guard: f64 },
    #[error("invalid finite metric: {0}")]
    InvalidMetric(String),
    #[error("graph is not a metric tree")]
    NotATree,
    #[error("graph is not a circle (one vertex with a single self-loop)")]
    NotACircle,
    #[error("point {point} lies outside the interval [{lo}, {hi}]")]
    PointOutsideInterval { point: f64, lo: f64, hi: f64 },
    #[error("epsilon {value} outside the admissible range ({lo}, {hi})")]
    EpsilonOutOfRange { value: f64, lo: f64, hi: f64 },
    #[error("construction failed verification: {0}")]
    ConstructionVerificationFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
