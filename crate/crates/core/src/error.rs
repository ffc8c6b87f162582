use std::io;

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("scaling by zero is undefined for point distributions")]
    ZeroScalar,

    #[error("difference requires containment: point {point} has multiplicity {available} but {requested} would be removed")]
    ContainmentViolation {
        point: Complex64,
        available: u64,
        requested: u64,
    },

    #[error("half-angle {0} is outside (0, pi/2]")]
    InvalidHalfAngle(f64),

    #[error("invalid interval ({r}, {big_r}]: need 0 < r < R")]
    InvalidInterval { r: f64, big_r: f64 },

    #[error("radius {requested} lies beyond the truncation radius {horizon}")]
    HorizonExceeded { requested: f64, horizon: f64 },

    #[error("empty radius grid")]
    EmptyGrid,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid spans {decades:.3} decades, at least {required} are needed")]
    InsufficientSpan { decades: f64, required: f64 },

    #[error("point {0} is not finite")]
    NonFinitePoint(Complex64),

    #[error("multiplicity must be a positive integer")]
    ZeroMultiplicity,

    #[error("line {line}: infinite multiplicity is not supported (logarithmic sums would diverge)")]
    InfiniteMultiplicity { line: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid generator spec: {0}")]
    BadSpec(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid convex body: {0}")]
    InvalidBody(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
