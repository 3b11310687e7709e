use thiserror::Error;

/// Error type shared by every solver in the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A solver or evaluator was applied to a point in a different phase.
    #[error("wrong phase: {0}")]
    WrongPhase(String),

    /// A parameter required in this regime was not supplied.
    #[error("missing parameter: {0}")]
    MissingParameter(String),

    /// A parameter lies outside the range where the model is defined.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// A quadrature or expansion could not meet the requested tolerance.
    #[error("accuracy target not met: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    Accuracy { residual: f64, tolerance: f64 },

    /// An iterative solver failed to converge.
    #[error("no convergence: {message} (residual {residual:.3e})")]
    NonConvergence { message: String, residual: f64 },
}

impl Error {
    /// Stable machine-readable tag for each error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::WrongPhase(_) => "wrong-phase",
            Error::MissingParameter(_) => "missing-parameter",
            Error::OutOfRange(_) => "out-of-range",
            Error::Accuracy { .. } => "accuracy",
            Error::NonConvergence { .. } => "non-convergence",
        }
    }

    /// True for errors caused by invalid input rather than numerical failure.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::WrongPhase(_)
                | Error::MissingParameter(_)
                | Error::OutOfRange(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
