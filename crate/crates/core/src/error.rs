//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the toolkit.
///
/// `Domain` flags arguments outside a routine's documented range, `Numerical`
/// flags non-finite intermediate values or failed iterations, and
/// `QuadratureNonConvergence` carries the last two estimates of an adaptive
/// quadrature that exhausted its doubling budget.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("numerical error: {0}")]
    Numerical(String),

    #[error(
        "quadrature did not converge after {doublings} doublings \
         (last two estimates {previous:.12e}, {last:.12e})"
    )]
    QuadratureNonConvergence {
        doublings: u32,
        previous: f64,
        last: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
