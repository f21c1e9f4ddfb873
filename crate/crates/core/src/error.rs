use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular denominator: {0}")]
    SingularDenominator(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("duplicate abscissa {0} in interpolation samples")]
    DuplicateAbscissa(String),
    #[error("interpolation needs at least one sample")]
    NoSamples,
    #[error("no admissible point after {0} rejections; widen the sampling range")]
    SamplingExhausted(u64),
    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("lattice width {0} exceeds the supported maximum of {max}", max = crate::lattice::MAX_SITES)]
    TooManySites(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
