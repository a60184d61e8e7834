use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("repeated point {point}")]
    RepeatedPoint { point: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("cost bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("father is undefined for the all-zero root")]
    FatherOfRoot,

    #[error("refinement chain is incomplete: cumulative order {got} != target order {want}")]
    IncompleteChain { got: u64, want: u64 },

    #[error(
        "degree cap {cap} reached before the cumulative stabilizer refined down to the target"
    )]
    DegreeCapExceeded { cap: u32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
