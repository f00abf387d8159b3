use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("point at distance {distance:e} from the boundary (tolerance {tolerance:e})")]
    BoundaryProximity { distance: f64, tolerance: f64 },

    #[error("winding number did not converge: {0}")]
    Nonconvergent(String),

    #[error("point does not lie in the required region: {0}")]
    WrongRegion(String),

    #[error("kernel too small on the quadrature grid: {min_kernel:e} below floor {floor:e}")]
    KernelProximity { min_kernel: f64, floor: f64 },

    #[error("nodes {i} and {j} coincide within {tolerance:e}")]
    CoincidentNodes { i: usize, j: usize, tolerance: f64 },

    #[error("root finder failed: residual {residual:e} exceeds {tolerance:e}")]
    RootFailure { residual: f64, tolerance: f64 },

    #[error("function is not symmetric: permutation deviation {deviation:e}")]
    AsymmetryDetected { deviation: f64 },

    #[error("arity {n} exceeds the supported maximum {max}")]
    ArityTooLarge { n: usize, max: usize },

    #[error("no quadrature nodes survive the truncation")]
    Degenerate,

    #[error("{count} points exceed the pairwise limit of {max}")]
    TooManyPoints { count: usize, max: usize },

    #[error("not enough pairs for a fit: {0}")]
    InsufficientPairs(String),

    #[error("missing derivative field for multi-index {0}")]
    MissingDerivativeField(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
