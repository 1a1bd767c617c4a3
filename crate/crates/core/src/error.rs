use thiserror::Error;

/// Errors raised by the numerical kernels and the energy assembly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid geometry (radii, dimension) or configuration value.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The closed-form table has no entry for this dimension.
    #[error("closed form supports D in [4,11], got D={0}; use the numeric route")]
    UnsupportedDimension(u32),

    /// The narrow-slit series is only meaningful for eta < 1.
    #[error("closed form requires eta < 1 (narrow slit), got eta={0}")]
    OutOfRegime(f64),

    /// A root of the frequency equation could not be bracketed.
    #[error("root loss: {0}")]
    RootLoss(String),

    /// An iterative or truncated computation did not reach its tolerance.
    #[error("convergence failure: {message}")]
    Convergence {
        message: String,
        /// Best estimate reached before giving up, when one exists.
        partial: Option<f64>,
    },

    /// The caller-asserted decay class cannot make the contour integral converge.
    #[error("non-convergent tail: {0}")]
    NonConvergentTail(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
