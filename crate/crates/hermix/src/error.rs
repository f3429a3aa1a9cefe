use thiserror::Error;

/// Errors produced by graph construction, parsing and the analysis operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({u}, {v}) requires u < v")]
    UnorderedEdge { u: usize, v: usize },

    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    Graph6InvalidByte { byte: u8, offset: usize },

    #[error("truncated graph6 data: need {needed} adjacency bits, got {got}")]
    Graph6Truncated { needed: usize, got: usize },

    #[error("graph6 input is empty")]
    Graph6Empty,

    #[error("graph6 long form (n > 62) is not supported")]
    Graph6LongForm,

    #[error("graph order {0} exceeds the graph6 short form limit of 62")]
    Graph6TooLarge(usize),

    #[error("unsupported order {0}: expected one of {1}")]
    UnsupportedOrder(usize, &'static str),

    #[error("{0}")]
    Usage(String),

    #[error("mixed graph JSON: {0}")]
    MixedJson(String),

    #[error("unknown edge state {0:?} (expected \"undirected\", \"forward\" or \"backward\")")]
    UnknownState(String),

    #[error("unknown fixture name {0:?}")]
    UnknownFixture(String),

    #[error("graph is not oriented: edge ({0}, {1}) is undirected")]
    NotOriented(usize, usize),

    #[error("switching function has {got} signs but the graph has {n} vertices")]
    SwitchingLength { got: usize, n: usize },

    #[error("switching is invalid: sign change across undirected edge ({0}, {1})")]
    InvalidSwitching(usize, usize),

    #[error("mixed graphs have different underlying graphs")]
    UnderlyingMismatch,

    #[error("permutation is not an automorphism of the underlying graph")]
    NotAnAutomorphism,

    #[error("vertices ({0}, {1}, {2}, {3}) do not form a 4-cycle")]
    NotAFourCycle(usize, usize, usize, usize),

    #[error("4-cycle criterion not applicable ({0}), use is_optimum")]
    CriterionNotApplicable(String),

    #[error("eigensolver did not converge: off-diagonal norm {off:.3e} after {sweeps} sweeps")]
    NoConvergence { off: f64, sweeps: usize },

    #[error("spectrum failed a moment identity: {0}")]
    SpectralCheck(String),

    #[error("search space too large: {edges} edges exceeds the {limit}-edge limit for {strategy} enumeration")]
    SpaceTooLarge {
        edges: usize,
        limit: usize,
        strategy: &'static str,
    },

    #[error("hypercube dimension must be at least 1")]
    ZeroDimension,

    #[error("hypercube dimension {0} exceeds supported limit {1}")]
    DimensionTooLarge(u32, u32),

    #[error("orientation is not optimum: {0}")]
    NotOptimumOrientation(String),

    #[error("switching solver failed on an optimum orientation; this contradicts the uniqueness guarantee and indicates a defect: {0}")]
    UniquenessViolation(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("underlying graph is not hypercube({0})")]
    NotAHypercube(u32),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
