use thiserror::Error;

/// Errors produced by the algebra kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("metric is not symmetric positive definite")]
    MetricNotPositive,

    #[error("exact Hodge star requires sqrt(det g) to be rational; det g = {0}")]
    ExactHodgeUnsupported(String),

    #[error("3-form does not induce a definite bilinear form")]
    NotAG2Form,

    #[error("covariant derivative in direction {direction} has a component outside the vector-type summand (residual norm^2 = {residual})")]
    NablaNotInV7Component { direction: usize, residual: String },

    #[error("covariant derivative in direction {direction} has a component outside the vector-type summand (residual norm^2 = {residual})")]
    NablaNotInW7Component { direction: usize, residual: String },

    #[error("vector has a nonzero e0-component")]
    NotInW7,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
