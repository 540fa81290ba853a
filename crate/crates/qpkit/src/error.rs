use thiserror::Error;

/// Errors shared by all qpkit operations.
#[derive(Debug, Error)]
pub enum QpError {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("arrow {0} references a missing vertex")]
    DanglingArrow(String),
    #[error("potential term is not a cyclic path: {0}")]
    NonCyclicTerm(String),
    #[error("zero coefficient on potential term {0}")]
    ZeroCoefficient(String),
    #[error("element degree {degree} exceeds the confluence bound {bound}")]
    DegreeExceeded { degree: usize, bound: usize },
    #[error("subset is not a cut: cycle {0} has degree {1}")]
    NotACut(String, i64),
    #[error("Jacobian algebra dimension undetermined at bound {0}")]
    UndeterminedDimension(usize),
    #[error("algebra is not selfinjective: {0}")]
    NotSelfinjective(String),
    #[error("relation is not admissible: {0}")]
    NonAdmissibleRelation(String),
    #[error("relations are not a minimal generating set")]
    NonMinimalRelations,
    #[error("relation mixes endpoint pairs: {0}")]
    MixedEndpointRelation(String),
    #[error("vertex {0} lies on a 2-cycle or loop")]
    TwoCycleAtVertex(String),
    #[error("2-cycle reduction did not terminate within degree bound {0}")]
    ReductionBoundExceeded(usize),
    #[error("orbit mutation precondition violated: {0}")]
    OrbitPreconditionViolated(String),
    #[error("vertex {0} is not a strict source")]
    NotStrictSource(String),
    #[error("vertex {0} is not a strict sink")]
    NotStrictSink(String),
    #[error("no source sequence exists: the truncated quiver has a cycle")]
    NoSequence,
    #[error("cut is not compatible with the base cut")]
    NotCompatible,
    #[error("canvas is disconnected")]
    Disconnected,
    #[error("embedding does not match the canvas: {0}")]
    EmbeddingMismatch(String),
    #[error("rotation system is not planar: {0}")]
    NotPlanar(String),
    #[error("coefficients cannot be normalized by arrow rescaling: {0}")]
    CoefficientNormalization(String),
    #[error("vertex {0} is not planar mutable: {1}")]
    NotPlanarMutable(String, String),
    #[error("unit square ({0},{1}) has an illegal face pattern")]
    IllegalFacePattern(usize, usize),
    #[error("quiver is not alternating: vertex {0} is neither a sink nor a source")]
    NotAlternating(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("lattice search exceeded the size bound {0}")]
    SizeBoundExceeded(usize),
}

pub type Result<T> = std::result::Result<T, QpError>;
