use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::Result;
use crate::quadrature::QuadratureResult;
use crate::series::SeriesResult;

/// A numerically computed value with a propagated error bound.
///
/// Only quadrature and series results can be turned into an estimate, so a
/// left-hand side always rests on at least one numerical evaluation. Closed
/// forms may enter afterwards through [`Estimate::add_exact`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    value: Complex64,
    error: f64,
    evaluations: usize,
}

impl Estimate {
    /// From a quadrature result; a non-converged rule is an error.
    pub fn quad(r: QuadratureResult) -> Result<Self> {
        let r = r.require_converged()?;
        Ok(Estimate {
            value: r.value,
            error: r.error_estimate,
            evaluations: r.evaluations,
        })
    }

    pub fn series(r: SeriesResult) -> Self {
        Estimate {
            value: r.value,
            error: r.total_error(),
            evaluations: r.terms_used,
        }
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn error(&self) -> f64 {
        self.error
    }

    /// Integrand evaluations or series terms behind the estimate.
    pub fn evaluations(&self) -> usize {
        self.evaluations
    }

    /// Shifts the value by an exactly known quantity.
    pub fn add_exact(self, c: Complex64) -> Self {
        Estimate {
            value: self.value + c,
            ..self
        }
    }

    pub fn scale(self, c: Complex64) -> Self {
        Estimate {
            value: self.value * c,
            error: self.error * c.norm(),
            evaluations: self.evaluations,
        }
    }
}

impl Add for Estimate {
    type Output = Estimate;
    fn add(self, o: Estimate) -> Estimate {
        Estimate {
            value: self.value + o.value,
            error: self.error + o.error,
            evaluations: self.evaluations + o.evaluations,
        }
    }
}

impl Sub for Estimate {
    type Output = Estimate;
    fn sub(self, o: Estimate) -> Estimate {
        self + (-o)
    }
}

impl Neg for Estimate {
    type Output = Estimate;
    fn neg(self) -> Estimate {
        Estimate {
            value: -self.value,
            ..self
        }
    }
}

impl Mul<f64> for Estimate {
    type Output = Estimate;
    fn mul(self, c: f64) -> Estimate {
        self.scale(Complex64::new(c, 0.0))
    }
}

impl Mul<Complex64> for Estimate {
    type Output = Estimate;
    fn mul(self, c: Complex64) -> Estimate {
        self.scale(c)
    }
}
