use thiserror::Error;

/// Errors surfaced by the numerical kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("grid too small: n = {n}, need n >= {min} (and even)")]
    GridTooSmall { n: usize, min: usize },

    #[error("invalid grading strength {strength}: must be finite and in [1, 16]")]
    InvalidGrading { strength: f64 },

    #[error("function and grid do not match (different grid fingerprint)")]
    GridMismatch,

    #[error("radius {r} outside the admissible range [0, 1)")]
    OutOfDomain { r: f64 },

    #[error("invalid parameter {name}: {value} ({reason})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("boundary integrand overflows at r = {r}: u does not decay toward r = 1")]
    BoundaryOverflow { r: f64 },

    #[error("exponent overflow at r = {r}: exponent {exponent:.3e} exceeds the cap; refine the grid or increase eps")]
    ExponentOverflow { r: f64, exponent: f64 },

    #[error("operator not coercive (banded Cholesky pivot failed at row {row}); alpha too close to lambda_1")]
    NotCoercive { row: usize },

    #[error("alpha = {alpha} too close to lambda_1 = {lambda1}; refusing (need alpha < 0.98 * lambda_1)")]
    AlphaTooLarge { alpha: f64, lambda1: f64 },

    #[error("eigenvalue iteration did not converge within {max_iter} iterations")]
    EigenNoConvergence { max_iter: usize },

    #[error("origin extrapolation unstable: {reason}")]
    ExtrapolationUnstable { reason: &'static str },

    #[error("test-function assembly failed: {reason}")]
    TestFunction { reason: String },

    #[error("rescale window escapes the disc: scale * max radius = {reach} >= 1")]
    WindowEscapes { reach: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
