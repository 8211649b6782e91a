use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("partition is not nondecreasing at index {index}: {prev} > {next}")]
    Unsorted { index: usize, prev: u32, next: u32 },
    #[error("operation is undefined for the zero partition")]
    ZeroPartition,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("ideal is not shifted")]
    NotShifted,
    #[error("ideal is not strongly shifted")]
    NotStronglyShifted,
    #[error("ideal is not strongly stable")]
    NotStronglyStable,
    #[error("ideal is not equigenerated")]
    NotEquigenerated,
    #[error("budget exceeded: {what} (limit {limit})")]
    Budget { what: &'static str, limit: usize },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
