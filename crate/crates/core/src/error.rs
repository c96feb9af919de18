use thiserror::Error;

pub type Result<T> = std::result::Result<T, GaugeError>;

#[derive(Debug, Error)]
pub enum GaugeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("matrix is not a valid {what} (deviation {deviation:e})")]
    InvalidElement { what: &'static str, deviation: f64 },

    #[error("invalid patch: {0}")]
    InvalidPatch(String),

    #[error("axis {axis} out of range for a {dim}-dimensional patch")]
    AxisOutOfRange { axis: usize, dim: usize },

    #[error("patch too small: {0}")]
    PatchTooSmall(String),

    #[error("region invalid: {0}")]
    InvalidRegion(String),

    #[error("unknown family: {0}")]
    UnknownFamily(String),

    #[error("wrong patch dimension: expected {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("lagrangian kind `{0}` is not globally invariant; minimal coupling would not be gauge invariant")]
    NotGloballyInvariant(String),

    #[error(
        "curvature density is not invariant under the adjoint action (deviation {deviation:e})"
    )]
    CurvatureDensityNotInvariant { deviation: f64 },

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("malformed field file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
