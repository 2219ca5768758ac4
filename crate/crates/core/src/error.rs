use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation (ω ≤ 0, z ≤ 0, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed configuration, grid or preset.
    #[error("invalid input: {0}")]
    Validation(String),

    #[error(
        "quadrature did not converge after {subdivisions} subdivisions \
         (estimate {estimate}, error bound {error:.3e})"
    )]
    NoConvergence {
        estimate: Complex64,
        error: f64,
        subdivisions: usize,
    },

    #[error("semi-infinite tail not bounded after {panels} panels (estimate {estimate}, tail bound {tail:.3e})")]
    TailBound {
        estimate: Complex64,
        tail: f64,
        panels: usize,
    },

    /// The radial cutoff ladder of the bulk Green's function did not settle.
    #[error("cutoff ladder did not converge: {series:?}")]
    LadderNotConverged { series: Vec<(f64, f64)> },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) => 1,
            Error::Domain(_) => 2,
            Error::NoConvergence { .. } | Error::TailBound { .. } | Error::LadderNotConverged { .. } => 3,
        }
    }

    /// Short machine-readable tag for status columns.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Validation(_) => "invalid",
            Error::Domain(_) => "domain",
            Error::NoConvergence { .. } => "no-convergence",
            Error::TailBound { .. } => "tail-bound",
            Error::LadderNotConverged { .. } => "ladder-not-converged",
        }
    }
}

pub(crate) fn require_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{name} must be positive and finite, got {value}"
        )))
    }
}
