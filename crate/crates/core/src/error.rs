use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph order must be positive")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    IndexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate loop at vertex {0}")]
    DuplicateLoop(usize),
    #[error("edge list contains the self-pair {{{0}, {0}}}; loops belong in the loop list")]
    SelfPairInEdgeList(usize),
    #[error("integer overflow while counting walks")]
    Overflow,
    #[error("{0}")]
    SizeLimitExceeded(String),
    #[error("unsupported family for this closed form: {0}")]
    UnsupportedFamily(String),
    #[error("invalid loop placement: {0}")]
    InvalidLoopPlacement(String),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("graph is neither a path nor a cycle")]
    NotAPathOrCycle,
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("negative or non-finite exponent {0} is not supported")]
    NegativeExponentUnsupported(f64),
    #[error("exponents must satisfy 0 <= p <= q (got p = {p}, q = {q})")]
    InvalidExponents { p: f64, q: f64 },
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("graph has no edges")]
    Edgeless,
    #[error("(r, s, t) = ({r}, {s}, {t}) must be nonnegative with 4r = s + t + 2")]
    ConstraintViolation { r: f64, s: f64, t: f64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
