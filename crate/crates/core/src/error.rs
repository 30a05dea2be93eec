use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns one of these;
/// refusals of extension problems are ordinary values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("homomorphism is not well defined: {0}")]
    IllDefinedHom(String),

    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,

    #[error("invalid simplicial set: {0}")]
    InvalidSimplicialSet(String),

    #[error("invalid simplicial map: {0}")]
    InvalidSimplicialMap(String),

    #[error("degree {needed} is required but the stored cutoff is {cutoff}")]
    CutoffTooSmall { needed: usize, cutoff: usize },

    #[error("operation needs a compact simplicial set")]
    NotCompact,

    #[error("simplicial set is not polyhedral: {first} and {second} intersect outside the simplex system")]
    NotPolyhedral { first: String, second: String },

    #[error("target is not fibrant")]
    NotFibrant,

    #[error("target is not built as a contractible group nerve")]
    NotENerve,

    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),

    #[error("invalid chain map: {0}")]
    InvalidChainMap(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invariant table is inconsistent: {0}")]
    InconsistentTable(String),

    #[error("coefficient group is not a module over Z/{0}")]
    NotAModule(u64),

    #[error("superposition piece over {0} is not invertible")]
    SingularPiece(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
