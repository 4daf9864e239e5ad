use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not a clique cover of the graph")]
    NotCliqueCover,

    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("internal arithmetic error: {0}")]
    Internal(String),

    #[error("numeric rank {found} does not match expected dimension {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("Gram matrix has negative eigenvalue {value:e} beyond tolerance")]
    NegativeEigenvalue { value: f64 },
    #[error("squared circumradius is provably negative")]
    NegativeRadiusSquared,
    #[error("realized distances deviate by {deviation:e}, tolerance {tolerance:e}")]
    CertificationFailed { deviation: f64, tolerance: f64 },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid parameter point: {0}")]
    InvalidParamPoint(String),

    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: non-printable byte {byte:#04x} at offset {offset}")]
    Graph6NonPrintable { offset: usize, byte: u8 },
    #[error("graph6: malformed size prefix")]
    Graph6BadSize,
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits")]
    Graph6TrailingBits,
    #[error("line {line}: {msg}")]
    MalformedLine { line: usize, msg: String },

    #[error("search log: {0}")]
    Log(String),
}

pub type Result<T> = std::result::Result<T, Error>;
