//! Error types shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CalibError>;

/// Errors produced by dataset handling, metric computation, and calibrator
/// fitting or application.
#[derive(Debug, Error)]
pub enum CalibError {
    /// A configuration value is out of its valid range (non-positive
    /// temperature, split fraction producing an empty part, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Input data violates a precondition (non-finite logit, length
    /// mismatch, score outside [0, 1], ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A dataset file does not conform to the declared format. The message
    /// carries the row/column position when one applies.
    #[error("format error: {0}")]
    FormatError(String),

    /// The optimizer produced a non-finite loss and could not recover.
    #[error("optimization failure at iteration {iteration}: {message}")]
    OptimizationFailure { iteration: usize, message: String },

    /// The metric is undefined for this input (e.g. AUROC needs at least
    /// one positive and one negative target).
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    /// The fit is degenerate (e.g. beta calibration on single-class targets).
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CalibError {
    /// Format error annotated with a 1-based row/column position.
    pub fn format_at(row: usize, column: usize, message: impl Into<String>) -> Self {
        CalibError::FormatError(format!("row {row}, column {column}: {}", message.into()))
    }

    /// Format error annotated with a 1-based row position only.
    pub fn format_at_row(row: usize, message: impl Into<String>) -> Self {
        CalibError::FormatError(format!("row {row}: {}", message.into()))
    }
}
