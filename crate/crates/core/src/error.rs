use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// A quadrature (or tail estimate) did not reach its tolerance.
    #[error("no convergence in {op}: estimate {estimate:e}, error bound {error_bound:e}")]
    Convergence {
        op: &'static str,
        estimate: f64,
        error_bound: f64,
    },

    /// A truncated power series failed its tail test.
    #[error("series truncation failed after {terms} terms: last term {last_term:e} > tolerance {tolerance:e}")]
    Truncation {
        terms: usize,
        last_term: f64,
        tolerance: f64,
    },

    /// A result exceeds the representable floating-point range.
    #[error("range error in {op}: {detail}")]
    Range { op: &'static str, detail: String },

    /// The integrand grows without bound on the integration range.
    #[error("integrand diverges in {op}: {detail}")]
    IntegrandDivergence { op: &'static str, detail: String },

    /// Invalid configuration or grid.
    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn config(detail: impl Into<String>) -> Self {
        Error::Config(detail.into())
    }

    /// Whether the error stems from a numerical non-convergence (as opposed
    /// to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Convergence { .. }
                | Error::Truncation { .. }
                | Error::Range { .. }
                | Error::IntegrandDivergence { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
