use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid graph order {0} (supported: 1..=64)")]
    InvalidOrder(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("complete graph: {0}")]
    CompleteGraph(&'static str),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("matrix is not symmetric (asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("matrix dimension mismatch: expected {expected} entries, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("order {n} exceeds the enumeration guard {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("invalid pendant path: {0}")]
    InvalidTail(&'static str),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    MalformedByte { offset: usize, byte: u8 },
    #[error("expected {expected} bytes for n = {n}, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in final byte")]
    Padding,
    #[error("order {0} uses a non-canonical size prefix")]
    NonCanonicalSize(usize),
    #[error("order {0} is not supported (graphs hold 1..=64 vertices)")]
    UnsupportedOrder(usize),
}
