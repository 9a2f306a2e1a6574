//! Order-4 inversion formulas, with the polylogarithms on the left computed
//! from Li₄(w) = (w/6) ∫₀^∞ t³/(eᵗ − w) dt.

use num_complex::Complex64;

use super::*;
use crate::numerics::constants::PI;
use crate::registry::domain::{param, real_param};

pub(super) fn records() -> Vec<IdentityRecord> {
    let j1_points: Vec<Complex64> = (0..25).map(|i| c(0.02 + 0.04 * i as f64)).collect();
    vec![
        record(
            "J1",
            "Li₄((z−1)/z) + Li₄(z/(z−1))",
            "(myiden1) Theorem anathm \"Li₄((z−1)/z) + Li₄(z/(z−1))\"",
            ParameterDomain::real("z", RealSet::open(0.0, 1.0)),
            j1_lhs,
            j1_rhs,
            one("z", &j1_points),
        ),
        record(
            "J2",
            "Li₄(−1/a) + Li₄(−a)",
            "Theorem newthgh",
            ParameterDomain::complex("a", &[excl_below(0.0, true)]),
            j2_lhs,
            j2_rhs,
            one("a", &j2_points()),
        )
        .stress(one("a", &[c(1e-6), c(1e6), ci(-1.0, 1e-3)])),
    ]
}

/// 50 points on a log grid in [1e−3, 1e3] and 50 off the real axis.
fn j2_points() -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..50)
        .map(|i| c(10f64.powf(-3.0 + 6.0 * i as f64 / 49.0)))
        .collect();
    let radii = [0.01, 0.3, 1.0, 4.0, 200.0];
    let angles = [0.3, 0.9, 1.5, 2.1, 2.8];
    for &r in &radii {
        for &t in &angles {
            v.push(Complex64::from_polar(r, t));
            v.push(Complex64::from_polar(r, -t));
        }
    }
    v
}

/// Li₄(w₁) + Li₄(w₂) for w ∉ [1, ∞) as one integral.
fn li4_pair(w1: Complex64, w2: Complex64, tol: f64) -> Result<Estimate> {
    half_line_integral(
        |t| {
            // w t³/(eᵗ − w) = w t³ e^{−t}/(1 − w e^{−t})
            let g = t * t * t * (-t).exp() / 6.0;
            if g == 0.0 {
                return c(0.0);
            }
            let e = (-t).exp();
            w1 * g / (c(1.0) - w1 * e) + w2 * g / (c(1.0) - w2 * e)
        },
        tol,
    )
}

fn j1_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let z = real_param(p, "z")?;
    li4_pair(c((z - 1.0) / z), c(z / (z - 1.0)), tol)
}

fn j1_rhs(p: &Params) -> Result<Complex64> {
    let z = real_param(p, "z")?;
    let a = z.ln();
    let b = (-z).ln_1p();
    let p2 = PI * PI;
    let v = -7.0 * p2 * p2 / 360.0 - a * a * b * b / 4.0 - p2 / 12.0 * b * b - b.powi(4) / 24.0
        + p2 / 6.0 * a * b
        + a * b.powi(3) / 6.0
        - p2 / 12.0 * a * a
        + a.powi(3) * b / 6.0
        - a.powi(4) / 24.0;
    Ok(c(v))
}

fn j2_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let a = param(p, "a")?;
    li4_pair(-a.inv(), -a, tol)
}

fn j2_rhs(p: &Params) -> Result<Complex64> {
    let l = ln(param(p, "a")?);
    let l2 = l * l;
    Ok(c(-7.0 * PI.powi(4) / 360.0) - l2 * (PI * PI / 12.0) - l2 * l2 / 24.0)
}
