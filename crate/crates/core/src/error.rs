use thiserror::Error;

/// Errors raised by map construction, verification and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Permutation, involution or dart bookkeeping is malformed.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("map is disconnected: {0}")]
    Disconnected(String),

    #[error("not a quadrangulation: face {face} has length {len}")]
    NotQuadrangulation { face: usize, len: usize },

    #[error("loop at vertex {0}")]
    Loop(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("coloring error: {0}")]
    Coloring(String),

    #[error("certificate mismatch: {0}")]
    CertificateMismatch(String),

    #[error("surgery rejected: {0}")]
    SurgeryRejected(String),

    /// Face list does not close up into a surface around a vertex.
    #[error("assembly error at vertex {vertex}: {msg}")]
    Assembly { vertex: String, msg: String },

    /// A proved identity failed; the input embedding or the code is wrong.
    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),

    #[error("odd face {face} (length {len}): cycle parity map undefined")]
    ParityUndefined { face: usize, len: usize },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("improper walk: {0}")]
    ImproperWalk(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
