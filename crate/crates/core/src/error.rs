use thiserror::Error;

/// Errors raised by the library. Mathematical check failures are reported
/// through [`crate::AxiomReport`] values, not through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("algebra is not regular: {0}")]
    NotRegular(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("cocycle is not compatible with the twist maps: {0}")]
    InvalidCocycleCompatibility(String),

    #[error("cocycles are not cohomologous through the supplied 1-cochain")]
    NotCohomologous,

    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn ensure_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
