use thiserror::Error;

/// Failure cases shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("points are affinely dependent: hull has dimension {affine_dim} in R^{ambient}")]
    Dimension { ambient: usize, affine_dim: usize },
    #[error("ambient dimension {0} is outside the supported range")]
    AmbientDim(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("subspace basis is empty or linearly dependent")]
    DegenerateBasis,
    #[error("Minkowski coefficient must be non-negative")]
    NegativeCoefficient,
    #[error("body is not full-dimensional (affine dimension {affine_dim} in R^{ambient})")]
    LowerDimensional { ambient: usize, affine_dim: usize },
    #[error("interpolation parameter must lie in [0, 1]")]
    LambdaRange,
    #[error("body has zero volume")]
    ZeroVolume,
    #[error("e_n-shadows are not homothetic with rational scale")]
    NotHomotheticProjection,
    #[error("bodies have different volumes")]
    VolumeMismatch,
    #[error("direction must lie in the open positive quadrant")]
    Quadrant,
    #[error("direction schedule is empty")]
    EmptySchedule,
    #[error("mixed-area oracle failed: {0}")]
    Oracle(String),
    #[error("volume polynomial disagrees with the redundant interpolation node")]
    InterpolationInconsistency,
    #[error("empty point set")]
    EmptyInput,
}

impl Error {
    /// Stable name of the error case, used by the command-line front end.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "DimensionError",
            Error::AmbientDim(_) => "AmbientDimError",
            Error::DimensionMismatch { .. } => "DimensionMismatchError",
            Error::ZeroDirection => "ZeroDirectionError",
            Error::DegenerateBasis => "DegenerateBasisError",
            Error::NegativeCoefficient => "NegativeCoefficientError",
            Error::LowerDimensional { .. } => "LowerDimensionalError",
            Error::LambdaRange => "LambdaRangeError",
            Error::ZeroVolume => "ZeroVolumeError",
            Error::NotHomotheticProjection => "NotHomotheticProjectionError",
            Error::VolumeMismatch => "VolumeMismatchError",
            Error::Quadrant => "QuadrantError",
            Error::EmptySchedule => "EmptySchedule",
            Error::Oracle(_) => "OracleError",
            Error::InterpolationInconsistency => "InterpolationInconsistency",
            Error::EmptyInput => "EmptyInputError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
