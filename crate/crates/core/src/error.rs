use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by evaluators and the verification driver.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("{function}: pole at {at}")]
    Pole { function: &'static str, at: String },

    #[error("{function}: argument {arg} lies on the branch cut {cut}")]
    OnBranchCut {
        function: &'static str,
        arg: String,
        cut: &'static str,
    },

    #[error("{function}: {reason}")]
    Domain {
        function: &'static str,
        reason: String,
    },

    #[error("polylogarithm order {0} is not supported (expected 2, 3 or 4)")]
    UnsupportedOrder(i64),

    #[error("parameter {name} = {value} is outside the domain: {region} excluded")]
    ExcludedRegion {
        name: String,
        value: String,
        region: String,
    },

    #[error("missing parameter `{0}`")]
    MissingParameter(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("series did not reach tolerance {tol:e} after {terms} terms (tail bound {tail:e})")]
    NonConvergence { terms: usize, tail: f64, tol: f64 },

    #[error("quadrature did not converge (estimate {estimate:e}, error {error:e})")]
    QuadratureFailure { estimate: f64, error: f64 },
}

impl Error {
    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }

    /// True for errors caused by the arguments rather than by the numerics.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. }
                | Error::OnBranchCut { .. }
                | Error::Domain { .. }
                | Error::UnsupportedOrder(_)
                | Error::ExcludedRegion { .. }
                | Error::MissingParameter(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
