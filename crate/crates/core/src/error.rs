//! Error type shared by all modules of this crate.

use alloc::string::String;
use core::fmt;

/// Errors produced by evaluation, series algebra, fractional operators,
/// verification and transform checks.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation
    /// (e.g. `lambda <= -1` for a Wright function, `t < 0` for a series
    /// with fractional exponents).
    Domain(String),
    /// A hypothesis of the operator being applied is violated, such as
    /// `nu <= 1 - beta` where the Caputo power rule would leave its
    /// stated range of validity.
    Precondition(String),
    /// An operation would break a series invariant, e.g. a derivative
    /// producing a negative exponent without a compensating power factor.
    Invariant(String),
    /// The truncation tail could not be certified below the requested
    /// tolerance within the configured maximum number of terms.
    NonConvergence {
        /// Number of terms summed before giving up.
        max_terms: usize,
    },
    /// The decay hypothesis needed to bound a Laplace-transform tail
    /// beyond `t_max` could not be established from measured samples.
    TailNotCertified(String),
    /// Adaptive quadrature exhausted its subdivision budget before
    /// reaching the requested accuracy.
    Quadrature(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Invariant(msg) => write!(f, "invariant violated: {msg}"),
            Error::NonConvergence { max_terms } => {
                write!(f, "series tail not certified within {max_terms} terms")
            }
            Error::TailNotCertified(msg) => write!(f, "tail not certified: {msg}"),
            Error::Quadrature(msg) => write!(f, "quadrature failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
