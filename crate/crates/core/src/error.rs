use thiserror::Error;

/// Errors shared by all reconstruction and simulation stages.
#[derive(Debug, Error)]
pub enum ReconError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("trajectory sample {index} out of range: ({kx}, {ky})")]
    TrajectoryOutOfRange { index: usize, kx: f64, ky: f64 },

    #[error("sample vector length {got} does not match trajectory length {expected}")]
    SampleLengthMismatch { expected: usize, got: usize },

    #[error("dataset contains no nonzero samples")]
    EmptyDataset,

    #[error("solver diverged (non-finite iterate) at frame {frame}")]
    Divergence { frame: usize },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, ReconError>;
