//! Symmetric double series.

use num_complex::Complex64;

use super::*;
use crate::error::Error;
use crate::numerics::constants::{PI, ZETA3};
use crate::registry::domain::int_param;
use crate::series::{double_series_lhs, double_series_truncated, DEFAULT_MAX_SHELLS};

const ZETA2: f64 = PI * PI / 6.0;
const ZETA4: f64 = PI * PI * PI * PI / 90.0;

pub(super) fn records() -> Vec<IdentityRecord> {
    vec![
        record(
            "D0",
            "∑_j ∑_{k≥0} f(k+j, j) for f(k, j) = 1/(k+j)⁴ + 1/(k²j²)",
            "Theorem theoremh9 (bigmastht1)",
            ParameterDomain::None,
            d0_lhs,
            d0_rhs,
            none(),
        ),
        record(
            "D1",
            "∑_j ∑_{k≥0} f(k+j) f(j) = ½((∑f)² + ∑f²)",
            "Corollary coroh12",
            ParameterDomain::integers("f", 1, 4),
            d1_lhs,
            d1_rhs,
            one("f", &[c(1.0), c(2.0), c(3.0), c(4.0)]),
        ),
    ]
}

/// Shell summation to `tol`, or the full shell budget with its certified
/// tail when the series is too slow to reach `tol`.
fn shells<F, B>(f: F, tail: B, tol: f64) -> Result<Estimate>
where
    F: Fn(u64, u64) -> Complex64,
    B: Fn(u64) -> f64,
{
    match double_series_lhs(&f, &tail, tol) {
        Ok(r) => Ok(Estimate::series(r)),
        Err(Error::NonConvergence { .. }) => Ok(Estimate::series(double_series_truncated(
            &f,
            &tail,
            DEFAULT_MAX_SHELLS,
        ))),
        Err(e) => Err(e),
    }
}

fn d0_cell(n: u64, j: u64) -> Complex64 {
    let (n, j) = (n as f64, j as f64);
    c(1.0 / (n + j).powi(4) + 1.0 / (n * n * j * j))
}

// shell n sums to at most n/(n+1)⁴ + ζ(2)/n²
fn d0_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    shells(
        d0_cell,
        |n| 0.5 / (n as f64).powi(2) + ZETA2 / n as f64,
        tol,
    )
}

fn d0_rhs(_: &Params) -> Result<Complex64> {
    Ok(c(
        0.5 * (ZETA3 - ZETA4 + ZETA2 * ZETA2 + 17.0 * ZETA4 / 16.0)
    ))
}

/// A test function and the bound on its shells past N.
pub(crate) type Case = (fn(u64) -> f64, fn(u64) -> f64);

/// The four test functions f and, for each, a bound on everything past
/// shell N.
pub(crate) fn d1_case(case: u32) -> Option<Case> {
    fn inv_sq(k: u64) -> f64 {
        1.0 / (k as f64 * k as f64)
    }
    fn inv_cube(k: u64) -> f64 {
        1.0 / (k as f64).powi(3)
    }
    fn geo_log(k: u64) -> f64 {
        0.7f64.powi(k as i32) / k as f64
    }
    fn alt_geo(k: u64) -> f64 {
        (-0.6f64).powi(k as i32)
    }
    fn t1(n: u64) -> f64 {
        ZETA2 / n as f64
    }
    fn t2(n: u64) -> f64 {
        ZETA3 / (2.0 * (n as f64).powi(2))
    }
    fn t3(n: u64) -> f64 {
        -(0.3f64.ln()) * 0.7f64.powi(n as i32 + 1) / ((n as f64 + 1.0) * 0.3)
    }
    fn t4(n: u64) -> f64 {
        0.6 * 0.6f64.powi(n as i32 + 1) / 0.4
    }
    match case {
        1 => Some((inv_sq, t1)),
        2 => Some((inv_cube, t2)),
        3 => Some((geo_log, t3)),
        4 => Some((alt_geo, t4)),
        _ => None,
    }
}

fn case_of(p: &Params) -> Result<Case> {
    let k = int_param(p, "f")?;
    d1_case(k).ok_or_else(|| Error::domain("D1", format!("no test function {k}")))
}

fn d1_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let (f, tail) = case_of(p)?;
    shells(|n, j| c(f(n) * f(j)), tail, tol)
}

fn d1_rhs(p: &Params) -> Result<Complex64> {
    let v = match int_param(p, "f")? {
        1 => 7.0 * PI.powi(4) / 360.0,
        2 => 0.5 * (ZETA3 * ZETA3 + PI.powi(6) / 945.0),
        3 => 0.5 * (0.3f64.ln().powi(2) + li2(c(0.49))?.re),
        4 => 0.3515625,
        k => return Err(Error::domain("D1", format!("no test function {k}"))),
    };
    Ok(c(v))
}
