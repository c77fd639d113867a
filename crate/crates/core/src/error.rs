//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its mathematical domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A truncated sum failed to reach the requested tolerance within its cap.
    #[error("enumeration did not converge: residual {residual:.3e} above {tolerance:.3e} ({context})")]
    Convergence {
        residual: f64,
        tolerance: f64,
        context: String,
    },

    /// Fock-space truncation leaked more probability mass than allowed.
    #[error("truncation leakage {leakage:.3e} above tolerance {tolerance:.3e} ({context})")]
    Truncation {
        leakage: f64,
        tolerance: f64,
        context: String,
    },

    /// An invalid detector pattern was supplied.
    #[error("invalid detector pattern: {0}")]
    InvalidPattern(String),

    /// A qubit error probability at or above 1/2 gives a non-positive
    /// matching weight.
    #[error("error probability {0} >= 1/2 gives a non-positive decoder weight")]
    NonPositiveWeight(f64),

    /// Brute-force matching refuses large instances.
    #[error("brute-force matcher refuses {0} defects (limit {1})")]
    TooManyDefects(usize, usize),

    /// A decoder contract was violated.
    #[error("decoder contract violation: {0}")]
    Contract(String),

    /// No code distance in the supplied table achieves the target.
    #[error("no distance achieves target p_L {target:.3e}; best is d={best_d} at {best_pl:.3e} (extrapolate with larger d)")]
    TargetUnreachable {
        target: f64,
        best_d: usize,
        best_pl: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
