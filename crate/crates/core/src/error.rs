use thiserror::Error;

/// Errors produced by the numerical routines and point-set handling.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("Watson condition 2c - a - b + 1 > 0 violated (value {0})")]
    ConditionViolated(f64),

    #[error("pole encountered in {func}: {detail}")]
    Pole { func: &'static str, detail: String },

    #[error("algebra mismatch: dimension {left} vs {right}")]
    AlgebraMismatch { left: usize, right: usize },

    #[error("points belong to different spaces or have incompatible layouts")]
    SpaceMismatch,

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("sampler `{sampler}` is not supported on {space}")]
    UnsupportedSampler { sampler: String, space: String },

    #[error("point rejected: {0}")]
    InvalidPoint(String),

    #[error("invalid radial measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension m_{l} = {value} is not an integer")]
    NonIntegralDimension { l: usize, value: f64 },

    #[error("eigenvalue iteration failed to converge")]
    NoConvergence,

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
