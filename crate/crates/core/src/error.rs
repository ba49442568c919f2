use alloc::string::String;

/// Errors produced by the kernel toolkit.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("matrix is not positive semidefinite (pivot/eigen index {index}, value {value:e})")]
    NotPsd { index: usize, value: f64 },
    #[error("invalid vector: {0}")]
    InvalidVector(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("duplicate points at indices {first} and {second}")]
    DuplicatePoints { first: usize, second: usize },
    #[error("derivative jets unsupported: {0}")]
    UnsupportedJet(String),
    #[error("derivative order {order} exceeds the cap of {cap}")]
    DerivativeOrderTooHigh { order: usize, cap: usize },
    #[error("kernel family is not radial")]
    NotRadial,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("linear system is ill-conditioned (pivot {pivot}); try a larger ridge")]
    IllConditioned { pivot: usize },
    #[error("finite-difference stencil too close to a non-smooth locus: {0}")]
    NearSingularLocus(String),
    #[error("dimension bound violated: {0}")]
    DimensionBound(String),
    #[error("numerical inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;
