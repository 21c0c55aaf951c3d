use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type.
///
/// Variants map onto the CLI exit codes: [`Error::NotEffective`] exits with 3,
/// [`Error::HorizonExhausted`] with 4, everything else with 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Operation parameters violate a domain invariant (zero magnitudes,
    /// output registered before input, non-finite values, ...).
    #[error("invalid operation: {0}")]
    InvalidOperation(String),

    /// A sampled signal violates its invariants (non-positive step, negative
    /// or non-finite samples, step too coarse for the operation).
    #[error("invalid signal: {0}")]
    InvalidSignal(String),

    /// Two signals cannot be placed on a common uniform grid.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// The resource return never compensates the resource consumption
    /// (output value does not exceed input value), so no completion time
    /// and no finite resource intensity exist.
    #[error("operation not effective: {0}")]
    NotEffective(String),

    /// The compensation search ran past its horizon bound.
    #[error("horizon exhausted: {0}")]
    HorizonExhausted(String),

    /// A sweep generated an operation outside the effective domain.
    #[error("sweep domain error at operation {index}: {reason}")]
    SweepDomain { index: usize, reason: String },

    /// An operation set was empty where at least one row is required.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// A CSV input could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
