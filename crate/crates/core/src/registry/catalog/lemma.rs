//! Harmonic-number series and the basic dilogarithm integral.

use num_complex::Complex64;

use super::*;
use crate::numerics::constants::{LN_2, PI, ZETA3};
use crate::numerics::gamma::harmonic_real;
use crate::series::{log_power_tail, sum_series};

pub(super) fn records() -> Vec<IdentityRecord> {
    vec![
        record(
            "L1",
            "∑ H_k/k³",
            "(hrmkcu)",
            ParameterDomain::None,
            l1_lhs,
            l1_rhs,
            none(),
        ),
        record(
            "L2",
            "∑ H_k/(2k−1)³",
            "(ftpv)",
            ParameterDomain::None,
            l2_lhs,
            l2_rhs,
            none(),
        ),
        record(
            "L3",
            "∑ H_{2k−1}/(2k−1)³",
            "(wgt1)",
            ParameterDomain::None,
            l3_lhs,
            l3_rhs,
            none(),
        ),
        record(
            "L4",
            "∑ H_{2k}/k³",
            "(relf1)",
            ParameterDomain::None,
            l4_lhs,
            l4_rhs,
            none(),
        ),
        record(
            "HK",
            "∑ H_k/(2k+1)³",
            "(hafe1) reindexed",
            ParameterDomain::None,
            hk_lhs,
            hk_rhs,
            none(),
        ),
        record(
            "R1",
            "∫₀¹ Li₂(z) ln(1+z)/z dz",
            "(qot1) \"∫₀¹ Li₂(z) ln(1+z)/z dz\"",
            ParameterDomain::None,
            r1_lhs,
            r1_rhs,
            none(),
        ),
        record(
            "AB3",
            "∫₀¹ z^{k−1} ln(1+z) dz = (H_k − H_{k/2})/k",
            "(abv3)",
            ParameterDomain::integers("k", 1, i64::MAX),
            ab3_lhs,
            ab3_rhs,
            one("k", &[c(1.0), c(2.0), c(3.0), c(5.0), c(10.0)]),
        ),
    ]
}

fn harmonic_series<F>(mut term: F, tail: impl Fn(u64) -> f64, tol: f64) -> Result<Estimate>
where
    F: FnMut(u64) -> f64,
{
    Ok(Estimate::series(sum_series(|k| c(term(k)), tail, tol)?))
}

fn l1_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    let mut h = 0.0;
    harmonic_series(
        |k| {
            let k = k as f64;
            h += 1.0 / k;
            h / (k * k * k)
        },
        log_power_tail(1.0, 1.0, 3.0),
        tol,
    )
}

fn l1_rhs(_: &Params) -> Result<Complex64> {
    Ok(c(PI.powi(4) / 72.0))
}

// (2k − 1)³ ≥ k³
fn l2_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    let mut h = 0.0;
    harmonic_series(
        |k| {
            let kf = k as f64;
            h += 1.0 / kf;
            let q = 2.0 * kf - 1.0;
            h / (q * q * q)
        },
        log_power_tail(1.0, 1.0, 3.0),
        tol,
    )
}

fn l2_rhs(_: &Params) -> Result<Complex64> {
    Ok(c(-PI * PI / 4.0
        + PI.powi(4) / 64.0
        + 2.0 * LN_2
        + 7.0 * ZETA3 / 4.0
        - 7.0 * LN_2 * ZETA3 / 4.0))
}

// H_{2k−1} ≤ 1 + ln 2 + ln k and (2k − 1)³ ≥ k³
fn l3_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    let mut h = 0.0;
    harmonic_series(
        |k| {
            let q = 2.0 * k as f64 - 1.0;
            if k > 1 {
                h += 1.0 / (q - 1.0);
            }
            h += 1.0 / q;
            h / (q * q * q)
        },
        log_power_tail(1.0, 1.0 + LN_2, 3.0),
        tol,
    )
}

fn l3_rhs(_: &Params) -> Result<Complex64> {
    let l = LN_2;
    let v = PI.powi(4) / 45.0 + PI * PI * l * l / 24.0 - l.powi(4) / 24.0 - 7.0 * l * ZETA3 / 8.0;
    Ok(c(v) - li4(c(0.5))?)
}

fn l4_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    let mut h = 0.0;
    harmonic_series(
        |k| {
            let kf = k as f64;
            h += 1.0 / (2.0 * kf - 1.0) + 1.0 / (2.0 * kf);
            h / (kf * kf * kf)
        },
        log_power_tail(1.0, 1.0 + LN_2, 3.0),
        tol,
    )
}

fn l4_rhs(_: &Params) -> Result<Complex64> {
    let l = LN_2;
    let v = -PI.powi(4) / 15.0 - PI * PI * l * l / 3.0 + l.powi(4) / 3.0 + 7.0 * l * ZETA3;
    Ok(c(v) + li4(c(0.5))? * 8.0)
}

// (2k + 1)³ ≥ 8k³
fn hk_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    let mut h = 0.0;
    harmonic_series(
        |k| {
            let kf = k as f64;
            h += 1.0 / kf;
            let q = 2.0 * kf + 1.0;
            h / (q * q * q)
        },
        log_power_tail(0.125, 1.0, 3.0),
        tol,
    )
}

fn hk_rhs(_: &Params) -> Result<Complex64> {
    Ok(c(PI.powi(4) / 64.0 - 7.0 * LN_2 * ZETA3 / 4.0))
}

fn r1_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    unit_integral(|t| c(li2_real(t) * t.ln_1p() / t), tol)
}

fn r1_rhs(_: &Params) -> Result<Complex64> {
    let l = LN_2;
    let v = l.powi(4) / 12.0 - PI * PI * l * l / 12.0 - PI.powi(4) / 60.0 + 7.0 * l * ZETA3 / 4.0;
    Ok(c(v) + li4(c(0.5))? * 2.0)
}

fn ab3_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let k = crate::registry::domain::int_param(p, "k")? as i32;
    unit_integral(|z| c(z.powi(k - 1) * z.ln_1p()), tol)
}

fn ab3_rhs(p: &Params) -> Result<Complex64> {
    let k = crate::registry::domain::int_param(p, "k")? as f64;
    Ok(c((harmonic_real(k)? - harmonic_real(k / 2.0)?) / k))
}
