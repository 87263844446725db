use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller supplied data violating an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),
    /// Text could not be parsed into a value.
    #[error("parse error: {0}")]
    Parse(String),
    /// Rejection sampling could not find a generic configuration.
    #[error("no generic sample of type {type_id} after {attempts} attempts; field too small")]
    FieldTooSmall { type_id: u8, attempts: usize },
    /// A line lies inside the conic, so the restricted quadratic form is identically zero.
    #[error("line is a component of the conic")]
    LineInConic,
    /// A point with vanishing last coordinate has no affine representative.
    #[error("point {0} lies outside the affine chart z != 0")]
    OutsideChart(String),
    /// Request is well-formed but has no defined answer here.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An internal consistency check failed; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
