use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two families: rejected input (bad sequences,
/// out-of-range parameters, malformed text) and `Internal`, which signals a
/// broken invariant inside the library itself.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),

    #[error("not an O-sequence: h_{degree} = {value} exceeds the Macaulay bound {bound}")]
    NotOSequence {
        degree: usize,
        value: u64,
        bound: String,
    },

    #[error("codimension {codim} exceeds the {vars} available variables")]
    TooFewVariables { codim: u64, vars: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("monomial ideal is not stable: {0}")]
    NotStable(String),

    #[error("monomial ideal is not Artinian")]
    NotArtinian,

    #[error("malformed monomial: {0}")]
    MalformedMonomial(String),

    #[error("malformed type vector: {0}")]
    MalformedTypeVector(String),

    #[error("invalid type vector: {0}")]
    InvalidTypeVector(String),

    #[error("not decomposable by greedy peeling: {0}")]
    NotDecomposable(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
