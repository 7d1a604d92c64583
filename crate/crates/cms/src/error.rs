use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix order must be at least 1")]
    InvalidOrder,
    #[error("grid order {grid} does not divide matrix order {order}")]
    ShapeMismatch { order: usize, grid: usize },
    #[error("matrix orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("a spec needs at least one couple")]
    EmptySpec,
    #[error("compounding step must be nonzero")]
    InvalidStep,
    #[error("unknown catalog square `{0}`")]
    UnknownCatalog(String),
    #[error("level {0} is outside the supported range {1}..={2}")]
    InvalidLevel(usize, usize, usize),
    #[error("couples are not a partition of the powers 3^0..3^(2l-1): {0}")]
    NotNatural(String),
    #[error("entropy is undefined for an all-zero spectrum")]
    ZeroSpectrum,
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("malformed couple list `{0}`: expected e.g. \"1,3;9,27\"")]
    BadCoupleString(String),
    #[error("invalid square document: {0}")]
    BadDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
