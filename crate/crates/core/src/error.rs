use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("class {label} has no training points")]
    EmptyClass { label: usize },

    #[error("expected binary labels in {{0,1}}, got label {got}")]
    NonBinaryLabels { got: usize },

    #[error("projected offset {offset} falls outside the bin range [{lo}, {hi}]")]
    OffsetOutOfRange { offset: f64, lo: f64, hi: f64 },

    #[error("gave up after {tries} draws ({rejections} candidates rejected)")]
    MaxTriesExhausted { tries: usize, rejections: usize },

    #[error("fitting did not converge after {sweeps} sweeps (max discrepancy {discrepancy:.3e})")]
    NonConvergence { sweeps: usize, discrepancy: f64 },

    #[error("calibration size {got} too small, need at least {min}")]
    CalibrationTooSmall { got: usize, min: usize },

    #[error("test not applicable: {0}")]
    Unsatisfiable(String),
}
