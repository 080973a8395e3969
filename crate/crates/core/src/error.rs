//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by model fitting, calibration and simulation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The fitting algorithm failed to converge (separation or iteration cap).
    /// Coefficients from a non-converged fit must not be used.
    #[error("fit did not converge: {0}")]
    NonConvergence(String),

    /// All outcomes are 0 or all are 1.
    #[error("degenerate outcome vector: {0}")]
    DegenerateOutcome(String),

    /// A covariate (or supplied linear predictor) is constant.
    #[error("constant predictor: {0}")]
    ConstantPredictor(String),

    /// Input sequences have incompatible lengths.
    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    /// An argument is outside the mathematical domain of the formula.
    #[error("domain error: {0}")]
    DomainError(String),

    /// No (mu, sigma) pair can realise the requested prevalence/C-statistic.
    #[error("no solution: {0}")]
    NoSolution(String),

    /// A bracketing root find could not straddle its target.
    #[error("bracket failure: {0}")]
    BracketFailure(String),

    /// Root of a 1-D equation could not be found in the admissible range.
    #[error("no root: {0}")]
    NoRoot(String),

    /// The iterative sample-size optimisation failed; the message reports the bracket.
    #[error("search did not converge: {0}")]
    NoConvergence(String),

    /// The data-generating mechanism could not be calibrated for a simulation run.
    #[error("calibration failure: {0}")]
    CalibrationFailure(String),

    /// Too many replicates (or bootstrap resamples) failed to fit.
    #[error("excessive failures: {0}")]
    ExcessiveFailures(String),

    /// A covariance matrix has no Cholesky factorisation.
    #[error("covariance is not positive definite: {0}")]
    NonPositiveDefinite(String),

    /// A distribution with no successful replicates cannot be summarised.
    #[error("empty distribution: {0}")]
    EmptyDistribution(String),

    /// Invalid configuration or input values.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error is a per-replicate fitting failure that a simulation
    /// loop records and skips, as opposed to a structural error that aborts it.
    pub fn is_replicate_failure(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence(_)
                | Error::DegenerateOutcome(_)
                | Error::ConstantPredictor(_)
                | Error::ExcessiveFailures(_)
        )
    }
}
