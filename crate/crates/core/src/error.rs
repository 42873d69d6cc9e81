use thiserror::Error;

/// Errors produced across the library. Variant names follow the failure
/// they report rather than the module that raises them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("malformed encoding: {0}")]
    MalformedEncoding(String),
    #[error("graph contains no circuit")]
    Acyclic,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("contraction does not yield a cubic graph")]
    NotCubicResult,
    #[error("fixed partial colouring is not proper")]
    InconsistentFixed,
    #[error("edge {0} is a loop")]
    LoopEdge(usize),
    #[error("colouring is not proper on its domain")]
    ImproperColouring,
    #[error("graph is 3-edge-colourable, not a snark")]
    NotSnark,
    #[error("graph has a bridge")]
    Bridged,
    #[error("colouring defect is not 3")]
    DefectNotThree,
    #[error("cycle is not an induced 6-cycle")]
    NotInducedSixCycle,
    #[error("vertex {0} is incident with a loop")]
    LoopAtVertex(usize),
    #[error("invalid sum specification: {0}")]
    BadSpec(String),
    #[error("cut is not a small independent edge cut")]
    CutNotSmallIndependent,
    #[error("cover is not a perfect-matching 4-cover")]
    NotFourCover,
    #[error("boundary is not a 6-edge-cut")]
    NotSixCut,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid piece: {0}")]
    InvalidPiece(String),
    #[error("recipe reuses a Petersen element")]
    ElementReuse,
    #[error("recipe touches the fixed 6-cycle")]
    CoreTouched,
    #[error("not enough free Petersen elements for the requested operations")]
    PoolExhausted,
    #[error("certificate verification failed: {0}")]
    VerificationFailed(String),
    #[error("recipe does not match the graph")]
    RecipeMismatch,
    #[error("graph too large for the exact oracle ({n} > {limit} vertices)")]
    TooLarge { n: usize, limit: usize },
    #[error("member {0} of the cover is not a cycle")]
    NotACycle(usize),
    #[error("edge {0} is not covered")]
    Uncovered(usize),
    #[error("certificate schema error: {0}")]
    SchemaError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
