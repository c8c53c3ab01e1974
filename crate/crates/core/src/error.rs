use thiserror::Error;

/// Errors produced by graph construction, parsing and the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{{{0},{1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph6 parse error at byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial parse error at {pos}: {msg}")]
    PolyParse { pos: usize, msg: String },
    #[error("invalid family parameters for {family}: {constraint}")]
    InvalidFamily { family: String, constraint: String },
    #[error("descriptor parse error at {pos}: {msg}")]
    DescriptorParse { pos: usize, msg: String },
    #[error("{0} denotes a set of {1} graphs, not a single graph")]
    NotSingleGraph(String, usize),
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("invalid enumeration request: {0}")]
    InvalidSpec(String),
    #[error("graph must be connected")]
    Disconnected,
    #[error("root multiplicity {0} is below 2")]
    MultiplicityTooSmall(usize),
    #[error("malformed root handle: {0}")]
    InvalidHandle(String),
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    #[error("graph order {0} exceeds the brute-force guard of 16")]
    BruteForceGuard(usize),
    #[error("unknown verification selector {0:?}")]
    UnknownSelector(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
