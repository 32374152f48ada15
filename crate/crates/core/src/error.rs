use num_complex::Complex64;
use thiserror::Error;

use crate::numerics::ValueWithError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Arguments outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series argument lies outside the convergence region; the caller
    /// should switch to hyperlogarithm continuation.
    #[error("series does not converge for {what}; use hyperlogarithm continuation")]
    UseContinuation { what: String },

    /// A sum that diverges (e.g. a Dirichlet series at s = 1 with a
    /// non-vanishing character sum).
    #[error("divergent series: {0}")]
    Divergent(String),

    /// An adaptive procedure stopped before reaching its tolerance. The best
    /// estimate obtained so far is attached.
    #[error("{what} did not converge: estimate {} +/- {:.3e}", best.value, best.abs_error)]
    NonConvergence { what: String, best: ValueWithError },

    /// A pole of the integrand lies on (or too close to) the integration path.
    #[error("pole #{index} at {pole} is {distance:.3e} from the path (clearance {clearance:.3e}); {hint}")]
    PoleOnPath {
        index: usize,
        pole: Complex64,
        distance: f64,
        clearance: f64,
        hint: String,
    },

    #[error("ODE integration exceeded {0} steps")]
    StepExplosion(usize),

    #[error("series is not alternating with decreasing terms at index {0}")]
    NotAlternating(usize),

    #[error("non-finite value produced in {0}")]
    NonFinite(String),

    /// An orbit term of a group-symmetrised sum failed.
    #[error("orbit term {sigma} failed: {source}")]
    OrbitTerm {
        sigma: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
