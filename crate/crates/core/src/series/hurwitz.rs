use num_complex::Complex64;

use super::{sum_series, SeriesResult};
use crate::error::{fmt_c, Error, Result};
use crate::polylog::{hurwitz_zeta, hurwitz_zeta_em};

/// Parameters of ∑_{k≥1} ζ(m, (rk − s)/r)/(rk − s)^m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzSeriesParams {
    pub m: f64,
    pub r: Complex64,
    pub s: Complex64,
}

impl HurwitzSeriesParams {
    /// Checks m > 1, r ≠ 0 and Re(1 − s/r) > 0. The last condition keeps
    /// every shift w_k = k − s/r in the right half plane, which also rules
    /// out rk = s.
    pub fn new(m: f64, r: Complex64, s: Complex64) -> Result<Self> {
        if !(m > 1.0) || !m.is_finite() {
            return Err(Error::domain(
                "hurwitz_series",
                format!("requires m > 1, got {m}"),
            ));
        }
        if r.norm() == 0.0 {
            return Err(Error::domain("hurwitz_series", "r must be non-zero"));
        }
        let w1 = Complex64::new(1.0, 0.0) - s / r;
        if !(w1.re > 0.0) {
            return Err(Error::domain(
                "hurwitz_series",
                format!("requires Re((r − s)/r) > 0, got {}", fmt_c(w1)),
            ));
        }
        Ok(HurwitzSeriesParams { m, r, s })
    }

    /// (r − s)/r, the shift of the first term.
    pub fn first_shift(&self) -> Complex64 {
        Complex64::new(1.0, 0.0) - self.s / self.r
    }

    /// True when the whole sum lives on the real line.
    pub fn is_real(&self) -> bool {
        self.r.im == 0.0 && self.s.im == 0.0
    }
}

/// ∑_{k≥1} ζ(m, w_k)/(rk − s)^m with w_k = (rk − s)/r.
///
/// Real shifts use the Euler–Maclaurin evaluator, complex ones Hermite's
/// integral. With x = Re w_k, |ζ(m, w_k)| ≤ x^{−m} + x^{1−m}/(m − 1) and
/// |rk − s| ≥ |r| x, which integrates to the tail bound.
pub fn hurwitz_series_lhs(p: &HurwitzSeriesParams, tol: f64) -> Result<SeriesResult> {
    let m = p.m;
    let shift = p.s / p.r;
    let c = shift.re;
    let rn = p.r.norm();
    let real = p.is_real();
    let mut failure: Option<Error> = None;
    let term = |k: u64| -> Complex64 {
        let w = Complex64::new(k as f64, 0.0) - shift;
        let zeta = if real {
            hurwitz_zeta_em(m, w.re).map(|v| Complex64::new(v, 0.0))
        } else {
            hurwitz_zeta(m, w)
        };
        match zeta {
            Ok(z) => z / (p.r * k as f64 - p.s).powf(m),
            Err(e) => {
                failure.get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let tail = |k: u64| {
        let x = k as f64 - c;
        rn.powf(-m)
            * (x.powf(1.0 - 2.0 * m) / (2.0 * m - 1.0)
                + x.powf(2.0 - 2.0 * m) / ((m - 1.0) * (2.0 * m - 2.0)))
    };
    let r = sum_series(term, tail, tol);
    if let Some(e) = failure {
        return Err(e);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::constants::{CATALAN, PI};
    use crate::numerics::gamma::polygamma_real;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn unit_shift_gives_symmetric_zeta_value() {
        let p = HurwitzSeriesParams::new(2.0, c(1.0), c(0.0)).unwrap();
        let r = hurwitz_series_lhs(&p, 1e-10).unwrap();
        assert!((r.value.re - 7.0 * PI.powi(4) / 360.0).abs() < 1e-9);
    }

    #[test]
    fn half_shift() {
        let p = HurwitzSeriesParams::new(2.0, c(2.0), c(1.0)).unwrap();
        let r = hurwitz_series_lhs(&p, 1e-10).unwrap();
        let expect = ((PI * PI / 2.0).powi(2) + PI.powi(4) / 6.0) / 8.0;
        assert!((r.value.re - expect).abs() < 1e-9);
    }

    #[test]
    fn quarter_shift_matches_catalan_form() {
        // m = 2: the polygamma form carries (−1)^m (m−1)! = 1
        let p = HurwitzSeriesParams::new(2.0, c(4.0), c(1.0)).unwrap();
        let r = hurwitz_series_lhs(&p, 1e-11).unwrap();
        let g = CATALAN;
        let expect = 2.0 * g * g - g * PI * PI / 2.0
            + PI.powi(4) / 32.0
            + polygamma_real(3, 0.75).unwrap() / 192.0;
        assert!(
            (r.value.re - expect).abs() < 1e-9,
            "{} vs {expect}",
            r.value.re
        );
    }

    #[test]
    fn invalid_parameters() {
        assert!(HurwitzSeriesParams::new(1.0, c(1.0), c(0.0)).is_err());
        assert!(HurwitzSeriesParams::new(2.0, c(0.0), c(0.0)).is_err());
        assert!(HurwitzSeriesParams::new(2.0, c(1.0), c(1.0)).is_err());
    }
}
