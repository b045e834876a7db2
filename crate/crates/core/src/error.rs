use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("composability mismatch: {0}")]
    ComposabilityMismatch(String),
    #[error("algebra appears infinite-dimensional: {0}")]
    InfiniteDimensionalSuspected(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("composite is nonzero: {0}")]
    CompositeNonzero(String),
    #[error("missing witness: {0}")]
    WitnessMissing(String),
    #[error("object not in required class: {0}")]
    NotInClass(String),
    #[error("lift unsolvable: {0}")]
    LiftUnsolvable(String),
    #[error("kappa unsolvable: {0}")]
    KappaUnsolvable(String),
    #[error("preenvelope check failed: {0}")]
    PreenvelopeCheckFailed(String),
    #[error("precover check failed: {0}")]
    PrecoverCheckFailed(String),
    #[error("functor does not invert weak equivalence: {0}")]
    FDoesNotInvertS(String),
    #[error("functor is not stable-invariant: {0}")]
    FNotStableInvariant(String),
    #[error("unknown object: {0}")]
    UnknownObject(String),
}

pub type Result<T> = std::result::Result<T, Error>;
