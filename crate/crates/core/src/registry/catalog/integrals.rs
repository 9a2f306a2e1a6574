//! Log-log-log and dilogarithm integrals over [0, 1] with a complex parameter.
//!
//! A(a) = ∫ ln t ln(1+at) ln(1−t)/t, B(a) = ∫ ln t ln²(1+at)/t,
//! C(a) = ∫ Li₂(t) ln(1+at)/t.

use num_complex::Complex64;

use super::*;
use crate::numerics::constants::{PI, ZETA3};
use crate::registry::domain::param;

const ZETA2: f64 = PI * PI / 6.0;

pub(super) fn records() -> Vec<IdentityRecord> {
    let minus_one_open = ParameterDomain::complex("a", &[excl_below(-1.0, false)]);
    let nonpositive = ParameterDomain::complex("a", &[excl_below(0.0, true)]);
    let two_rays = ParameterDomain::complex("a", &[excl_below(-1.0, true), excl_above(0.0, true)]);
    let e1_domain = ParameterDomain::complex("a", &[excl_below(-1.0, false), RealSet::point(0.0)]);
    let extra_neg = [c(-0.75)];
    let a = |v: f64| params(&[("a", c(v))]);
    vec![
        record(
            "T1a",
            "A(a) + B(a)/2",
            "(thmhaf1) Theorem thmabd1 \"Let a ∈ ℂ∖(−∞, −1)\"",
            minus_one_open.clone(),
            t1a_lhs,
            t1a_rhs,
            standard("a", &minus_one_open, &[]),
        )
        .stress(vec![a(-0.99), a(-0.999)]),
        record(
            "T1b",
            "C(a) + B(a)/2",
            "(thmhaf2)",
            minus_one_open.clone(),
            t1b_lhs,
            t1b_rhs,
            standard("a", &minus_one_open, &[]),
        )
        .stress(vec![a(-0.99), a(-0.999)]),
        record(
            "SV1",
            "A(1) + B(1)/2 = π⁴/480",
            "Remark after thmabd1",
            ParameterDomain::None,
            sv1_lhs,
            sv1_rhs,
            none(),
        ),
        record(
            "SV2",
            "C(1) + B(1)/2 = π⁴/240",
            "Remark after thmabd1",
            ParameterDomain::None,
            sv2_lhs,
            sv2_rhs,
            none(),
        ),
        record(
            "SV3",
            "C(−1) + B(−1)/2 = −π⁴/60",
            "Remark after thmabd1 \"= −π⁴/60\"",
            ParameterDomain::None,
            sv3_lhs,
            sv3_rhs,
            none(),
        ),
        record(
            "T2",
            "A(a) through Li₄(1/(1+a)) + Li₄(a/(1+a))",
            "Theorem thmhaf22",
            nonpositive.clone(),
            a_lhs,
            t2_rhs,
            standard("a", &nonpositive, &[]),
        )
        .stress(vec![a(0.01), a(50.0)]),
        record(
            "T3",
            "C(a) through Li₄(1/(1+a)) + Li₄(a/(1+a))",
            "(inthmhaf3) Theorem thmhaf3 \"Li₄(1/(1+a)) + Li₄(a/(1+a))\"",
            nonpositive.clone(),
            c_lhs,
            t3_rhs,
            standard("a", &nonpositive, &[]),
        )
        .stress(vec![a(0.01), a(50.0)]),
        record(
            "E7",
            "B(a) for a ∈ ℂ∖(−∞, 0]",
            "(fimp1)",
            nonpositive.clone(),
            b_lhs,
            e7_rhs,
            standard("a", &nonpositive, &[]),
        )
        .stress(vec![a(0.01)]),
        record(
            "T4",
            "A(a) through Li₄(1+a) and ln(−a)",
            "Theorem thmhaf4",
            two_rays.clone(),
            a_lhs,
            t4_rhs,
            standard("a", &two_rays, &extra_neg),
        )
        .stress(vec![a(-0.99), a(-0.01)]),
        record(
            "T5",
            "C(a) through Li₄(1+a) and ln(−a)",
            "Theorem thmhaf5",
            two_rays.clone(),
            c_lhs,
            t5_rhs,
            standard("a", &two_rays, &extra_neg),
        )
        .stress(vec![a(-0.99), a(-0.01)]),
        record(
            "E7b",
            "B(a) through Li₄(1+a) and ln(−a)",
            "(thmhaf5eq)",
            two_rays.clone(),
            b_lhs,
            e7b_rhs,
            standard("a", &two_rays, &extra_neg),
        )
        .stress(vec![a(-0.99), a(-0.01)]),
        record(
            "E1",
            "∫₀¹ ln t Li₂(t)/(1+at) dt",
            "(major2)",
            e1_domain.clone(),
            e1_lhs,
            e1_rhs,
            standard("a", &e1_domain, &[]),
        )
        .stress(vec![a(-0.99), a(0.001)]),
    ]
}

fn ln1at(a: Complex64, t: f64) -> Complex64 {
    ln1p(a * t)
}

/// ln t · ln(1+at) · ln(1−t)/t
fn a_integrand(a: Complex64, t: f64) -> Complex64 {
    ln1at(a, t) * (t.ln() * (-t).ln_1p() / t)
}

/// ln t · ln²(1+at)/t
fn b_integrand(a: Complex64, t: f64) -> Complex64 {
    let l = ln1at(a, t);
    l * l * (t.ln() / t)
}

/// Li₂(t) ln(1+at)/t
fn c_integrand(a: Complex64, t: f64) -> Complex64 {
    ln1at(a, t) * (li2_real(t) / t)
}

pub(super) fn a_integral(a: Complex64, tol: f64) -> Result<Estimate> {
    unit_integral(|t| a_integrand(a, t), tol)
}

pub(super) fn b_integral(a: Complex64, tol: f64) -> Result<Estimate> {
    unit_integral(|t| b_integrand(a, t), tol)
}

pub(super) fn c_integral(a: Complex64, tol: f64) -> Result<Estimate> {
    unit_integral(|t| c_integrand(a, t), tol)
}

fn t1a_at(a: Complex64, tol: f64) -> Result<Estimate> {
    unit_integral(|t| a_integrand(a, t) + b_integrand(a, t) * 0.5, tol)
}

fn t1b_at(a: Complex64, tol: f64) -> Result<Estimate> {
    unit_integral(|t| c_integrand(a, t) + b_integrand(a, t) * 0.5, tol)
}

fn t1a_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    t1a_at(param(p, "a")?, tol)
}

fn t1b_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    t1b_at(param(p, "a")?, tol)
}

fn a_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    a_integral(param(p, "a")?, tol)
}

fn b_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    b_integral(param(p, "a")?, tol)
}

fn c_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    c_integral(param(p, "a")?, tol)
}

fn sv1_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    t1a_at(c(1.0), tol)
}

fn sv1_rhs(_: &Params) -> Result<Complex64> {
    Ok(c(PI.powi(4) / 480.0))
}

fn sv2_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    t1b_at(c(1.0), tol)
}

fn sv2_rhs(_: &Params) -> Result<Complex64> {
    Ok(c(PI.powi(4) / 240.0))
}

fn sv3_lhs(_: &Params, tol: f64) -> Result<Estimate> {
    t1b_at(c(-1.0), tol)
}

fn sv3_rhs(_: &Params) -> Result<Complex64> {
    Ok(c(-PI.powi(4) / 60.0))
}

/// Li₂(−a), Li₄(−a).
fn neg_values(a: Complex64) -> Result<(Complex64, Complex64)> {
    Ok((li2(-a)?, li4(-a)?))
}

fn t1a_rhs(p: &Params) -> Result<Complex64> {
    let (l2, l4) = neg_values(param(p, "a")?)?;
    Ok(-l2 * l2 * 0.5 + l2 * ZETA2 - l4 * 2.0)
}

fn t1b_rhs(p: &Params) -> Result<Complex64> {
    let (l2, l4) = neg_values(param(p, "a")?)?;
    Ok(-l2 * ZETA2 + l4)
}

/// Pieces shared by the ℂ∖(−∞, 0] forms, with u = 1/(1+a), v = a/(1+a):
/// π²/12 l₁² + ln a l₁³/3 − l₁⁴/4 + l₁(Li₃u + Li₃v) + Li₄u + Li₄v.
fn uv_part(a: Complex64) -> Result<Complex64> {
    let l1 = ln1p(a);
    let la = ln(a);
    let u = (a + 1.0).inv();
    let v = a * u;
    let l1_2 = l1 * l1;
    Ok(
        l1_2 * (PI * PI / 12.0) + la * l1_2 * l1 / 3.0 - l1_2 * l1_2 * 0.25
            + l1 * (li3(u)? + li3(v)?)
            + li4(u)?
            + li4(v)?,
    )
}

fn t2_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let (l2, l4) = neg_values(a)?;
    Ok(c(-PI.powi(4) / 90.0) - l2 * l2 * 0.5 + l2 * ZETA2 - l4 + uv_part(a)?)
}

fn t3_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let (l2, l4) = neg_values(a)?;
    Ok(c(-PI.powi(4) / 90.0) - l2 * ZETA2 + l4 * 2.0 + uv_part(a)?)
}

fn e7_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let l4 = li4(-a)?;
    let l1 = ln1p(a);
    let la = ln(a);
    let u = (a + 1.0).inv();
    let v = a * u;
    let l1_2 = l1 * l1;
    Ok(
        c(PI.powi(4) / 45.0) - l1_2 * ZETA2 - la * l1_2 * l1 * (2.0 / 3.0) + l1_2 * l1_2 * 0.5
            - l1 * (li3(u)? + li3(v)?) * 2.0
            - l4 * 2.0
            - (li4(u)? + li4(v)?) * 2.0,
    )
}

/// ζ(3) l₁ + π²/12 l₁² + l₁⁴/24 − ln(−a) l₁³/6 − l₁ Li₃(−a) − Li₄(1+a) + Li₄(a/(1+a)).
fn shifted_part(a: Complex64) -> Result<Complex64> {
    let l1 = ln1p(a);
    let lma = ln(-a);
    let l1_2 = l1 * l1;
    Ok(l1 * ZETA3 + l1_2 * (PI * PI / 12.0) + l1_2 * l1_2 / 24.0
        - lma * l1_2 * l1 / 6.0
        - l1 * li3(-a)?
        - li4(a + 1.0)?
        + li4(a / (a + 1.0))?)
}

fn t4_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let (l2, l4) = neg_values(a)?;
    Ok(c(PI.powi(4) / 90.0) - l4 + l2 * ZETA2 - l2 * l2 * 0.5 + shifted_part(a)?)
}

fn t5_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let (l2, l4) = neg_values(a)?;
    Ok(c(PI.powi(4) / 90.0) + l4 * 2.0 - l2 * ZETA2 + shifted_part(a)?)
}

fn e7b_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let l4 = li4(-a)?;
    let l1 = ln1p(a);
    let lma = ln(-a);
    let l1_2 = l1 * l1;
    Ok(
        c(-PI.powi(4) / 45.0) - l1 * (2.0 * ZETA3) - l1_2 * ZETA2 - l1_2 * l1_2 / 12.0
            + lma * l1_2 * l1 / 3.0
            + l1 * li3(-a)? * 2.0
            - l4 * 2.0
            + li4(a + 1.0)? * 2.0
            - li4(a / (a + 1.0))? * 2.0,
    )
}

pub(super) fn e1_integral(a: Complex64, tol: f64) -> Result<Estimate> {
    unit_integral(|t| c(t.ln() * li2_real(t)) / (a * t + 1.0), tol)
}

fn e1_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    e1_integral(param(p, "a")?, tol)
}

pub(super) fn e1_closed(a: Complex64) -> Result<Complex64> {
    let (l2, l4) = neg_values(a)?;
    Ok((-l2 * l2 * 0.5 + l2 * (PI * PI / 3.0) - l4 * 3.0) / a)
}

fn e1_rhs(p: &Params) -> Result<Complex64> {
    e1_closed(param(p, "a")?)
}
