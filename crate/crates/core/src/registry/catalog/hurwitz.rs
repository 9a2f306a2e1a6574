//! Hurwitz zeta and polygamma series over shifted arithmetic progressions.

use num_complex::Complex64;

use super::*;
use crate::numerics::constants::{CATALAN, PI, ZETA3, ZETA5};
use crate::numerics::gamma::{polygamma, polygamma_real};
use crate::numerics::rational::{euler_number_abs_f64, factorial};
use crate::numerics::zeta::riemann_zeta;
use crate::polylog::hurwitz_zeta_em;
use crate::registry::domain::{int_param, param, real_param};
use crate::series::{hurwitz_series_lhs, sum_series, HurwitzSeriesParams};

pub(super) fn records() -> Vec<IdentityRecord> {
    let h1_domain = ParameterDomain::Composite(vec![
        ParameterDomain::real("m", RealSet::above(1.0, false)),
        ParameterDomain::complex("r", &[RealSet::point(0.0)]),
        ParameterDomain::complex("s", &[]),
    ]);
    let real_rs = |m: ParameterDomain| {
        ParameterDomain::Composite(vec![
            m,
            ParameterDomain::real("r", RealSet::above(0.0, false)),
            ParameterDomain::real("s", RealSet::open(f64::NEG_INFINITY, f64::INFINITY)),
        ])
    };
    let mut h1_samples = Vec::new();
    for m in [2.0, 3.0, 4.0, 2.5] {
        for r in [1.0, 2.0, 4.0] {
            for s in [0.0, 1.0, -0.5] {
                if r - s > 0.0 {
                    h1_samples.push(mrs(m, c(r), c(s)));
                }
            }
        }
    }
    h1_samples.push(mrs(3.0, ci(1.0, 1.0), c(0.5)));
    let h2_samples = [
        (2.0, 4.0, 1.0),
        (3.0, 4.0, 1.0),
        (2.0, 1.0, 0.0),
        (3.0, 2.0, 1.0),
        (4.0, 1.0, 0.5),
        (5.0, 4.0, 1.0),
    ]
    .iter()
    .map(|&(m, r, s)| mrs(m, c(r), c(s)))
    .collect();
    let h1s_samples = [
        (2.0, 1.0, 0.0),
        (3.0, 2.0, 1.0),
        (2.5, 4.0, -0.5),
        (4.0, 2.0, 0.0),
    ]
    .iter()
    .map(|&(m, r, s)| mrs(m, c(r), c(s)))
    .collect();
    let m_2_to_5 = one("m", &[c(2.0), c(3.0), c(4.0), c(5.0)]);
    vec![
        record(
            "H1",
            "∑ ζ(m, (rk−s)/r)/(rk−s)^m",
            "Theorem bigthmh1 \"Let Re(m) > 1, r, s ∈ ℂ\"",
            h1_domain,
            h1_lhs,
            h1_rhs,
            h1_samples,
        )
        .note(h1_note),
        record(
            "H1s",
            "∑ ζ(m, (rk+r−s)/r)/(rk−s)^m",
            "§1 display of the Hurwitz series",
            real_rs(ParameterDomain::real("m", RealSet::above(1.0, false))),
            h1s_lhs,
            h1s_rhs,
            h1s_samples,
        ),
        record(
            "H2",
            "∑ ψ_{m−1}((rj−s)/r)/(rj−s)^m",
            "Corollary thisc",
            real_rs(ParameterDomain::integers("m", 2, i64::MAX)),
            h2_lhs,
            h2_rhs,
            h2_samples,
        ),
        record(
            "H3",
            "∑ ψ_{m−1}((4j−1)/4)/(4j−1)^m",
            "(tirtheh2eq)",
            ParameterDomain::integers("m", 2, i64::MAX),
            h3_lhs,
            h3_rhs,
            m_2_to_5.clone(),
        ),
        record(
            "H3e",
            "∑ ψ_{m−1}((4j−1)/4)/(4j−1)^m, worked values for m = 2..5",
            "Examples after (tirtheh2eq) \"2G² − Gπ²/2 + π⁴/32 + ψ₃(3/4)/192\"",
            ParameterDomain::integers("m", 2, 5),
            h3_lhs,
            h3e_rhs,
            m_2_to_5,
        ),
        record(
            "H4",
            "∑ ψ_{2m−2}((4j−1)/4)/(4j−1)^{2m−1} through Euler numbers",
            "Corollary corsha with (psiabd1)",
            ParameterDomain::integers("m", 2, i64::MAX),
            h4_lhs,
            h4_rhs,
            one("m", &[c(2.0), c(3.0), c(4.0)]),
        ),
    ]
}

fn mrs(m: f64, r: Complex64, s: Complex64) -> Params {
    params(&[("m", c(m)), ("r", r), ("s", s)])
}

fn h1_note(p: &Params) -> Option<&'static str> {
    let complex =
        p.get("r").is_some_and(|r| r.im != 0.0) || p.get("s").is_some_and(|s| s.im != 0.0);
    complex.then_some("extrapolated domain")
}

fn hurwitz_params(p: &Params) -> Result<HurwitzSeriesParams> {
    HurwitzSeriesParams::new(real_param(p, "m")?, param(p, "r")?, param(p, "s")?)
}

fn h1_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    Ok(Estimate::series(hurwitz_series_lhs(
        &hurwitz_params(p)?,
        tol,
    )?))
}

/// ζ(s, w) in closed form: Euler–Maclaurin for real w, polygamma for
/// integer s and complex w.
fn zeta_closed(s: f64, w: Complex64) -> Result<Complex64> {
    if w.im == 0.0 {
        return Ok(c(hurwitz_zeta_em(s, w.re)?));
    }
    if s.fract() != 0.0 {
        return Err(crate::error::Error::domain(
            "hurwitz",
            "closed form for complex shifts needs an integer order",
        ));
    }
    let n = s as u32 - 1;
    let sign = if s as u32 % 2 == 0 { 1.0 } else { -1.0 };
    Ok(polygamma(n, w)? * (sign / factorial(n as u64)))
}

fn h1_rhs(p: &Params) -> Result<Complex64> {
    let hp = hurwitz_params(p)?;
    let w = hp.first_shift();
    let z1 = zeta_closed(hp.m, w)?;
    let z2 = zeta_closed(2.0 * hp.m, w)?;
    Ok((z1 * z1 + z2) / (hp.r.powf(hp.m) * 2.0))
}

/// (m, r, s, w₁ = (r − s)/r) for the real-parameter forms, checked.
fn real_mrs(p: &Params) -> Result<(f64, f64, f64, f64)> {
    let hp = HurwitzSeriesParams::new(real_param(p, "m")?, param(p, "r")?, param(p, "s")?)?;
    Ok((hp.m, hp.r.re, hp.s.re, hp.first_shift().re))
}

fn h1s_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let (m, r, s, _) = real_mrs(p)?;
    let shift = s / r;
    let mut failure = None;
    let res = sum_series(
        |k| {
            let w = k as f64 - shift;
            match hurwitz_zeta_em(m, w + 1.0) {
                Ok(z) => c(z / (r * k as f64 - s).powf(m)),
                Err(e) => {
                    failure.get_or_insert(e);
                    c(0.0)
                }
            }
        },
        |k| {
            let x = k as f64 - shift;
            r.powf(-m)
                * (x.powf(1.0 - 2.0 * m) / (2.0 * m - 1.0)
                    + x.powf(2.0 - 2.0 * m) / ((m - 1.0) * (2.0 * m - 2.0)))
        },
        tol,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(Estimate::series(res?))
}

fn h1s_rhs(p: &Params) -> Result<Complex64> {
    let (m, r, _, w) = real_mrs(p)?;
    let z1 = hurwitz_zeta_em(m, w)?;
    Ok(c(
        (z1 * z1 - hurwitz_zeta_em(2.0 * m, w)?) / (2.0 * r.powf(m))
    ))
}

/// ∑_{j≥1} ψ_n((rj − s)/r)/(rj − s)^p for real r > 0 and (r − s)/r > 0.
///
/// |ψ_n(w)| = n! ζ(n+1, w) ≤ n!(w^{−n−1} + w^{−n}/n), which with
/// x = j − s/r integrates to the tail bound.
pub(crate) fn polygamma_series(n: u32, pw: f64, r: f64, s: f64, tol: f64) -> Result<Estimate> {
    let shift = s / r;
    let nf = n as f64;
    let fact = factorial(n as u64);
    let mut failure = None;
    let res = sum_series(
        |j| match polygamma_real(n, j as f64 - shift) {
            Ok(v) => c(v / (r * j as f64 - s).powf(pw)),
            Err(e) => {
                failure.get_or_insert(e);
                c(0.0)
            }
        },
        |j| {
            let x = j as f64 - shift;
            let q = pw + nf;
            fact * r.powf(-pw) * (x.powf(-q) / q + x.powf(1.0 - q) / (nf * (q - 1.0)))
        },
        tol,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(Estimate::series(res?))
}

fn h2_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let m = int_param(p, "m")?;
    let (_, r, s, _) = real_mrs(p)?;
    polygamma_series(m - 1, m as f64, r, s, tol)
}

/// (−1)^m/(2r^m) (ψ_{m−1}(w)²/(m−1)! + (m−1)!/(2m−1)! ψ_{2m−1}(w))
fn polygamma_form(m: u32, r: f64, w: f64) -> Result<f64> {
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let a = polygamma_real(m - 1, w)?;
    let b = polygamma_real(2 * m - 1, w)?;
    let fm = factorial(m as u64 - 1);
    Ok(sign / (2.0 * r.powi(m as i32)) * (a * a / fm + fm / factorial(2 * m as u64 - 1) * b))
}

fn h2_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")?;
    let (_, r, _, w) = real_mrs(p)?;
    Ok(c(polygamma_form(m, r, w)?))
}

fn h3_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let m = int_param(p, "m")?;
    polygamma_series(m - 1, m as f64, 4.0, 1.0, tol)
}

fn h3_rhs(p: &Params) -> Result<Complex64> {
    Ok(c(polygamma_form(int_param(p, "m")?, 4.0, 0.75)?))
}

fn h3e_rhs(p: &Params) -> Result<Complex64> {
    let g = CATALAN;
    let v = match int_param(p, "m")? {
        2 => 2.0 * g * g - g * PI * PI / 2.0 + PI.powi(4) / 32.0 + polygamma_real(3, 0.75)? / 192.0,
        3 => {
            -PI.powi(6) / 64.0 + 7.0 * PI.powi(3) * ZETA3 / 8.0
                - 49.0 * ZETA3 * ZETA3 / 4.0
                - polygamma_real(5, 0.75)? / 7680.0
        }
        4 => polygamma_real(3, 0.75)?.powi(2) / 3072.0 + polygamma_real(7, 0.75)? / 430080.0,
        5 => {
            -25.0 * PI.powi(10) / 768.0 + 155.0 * PI.powi(5) * ZETA5 / 8.0
                - 2883.0 * ZETA5 * ZETA5
                - polygamma_real(9, 0.75)? / 30965760.0
        }
        m => {
            return Err(crate::error::Error::domain(
                "H3e",
                format!("no worked value for m = {m}"),
            ))
        }
    };
    Ok(c(v))
}

fn h4_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let m = int_param(p, "m")?;
    polygamma_series(2 * m - 2, (2 * m - 1) as f64, 4.0, 1.0, tol)
}

fn h4_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")?;
    let mi = m as i32;
    let e = euler_number_abs_f64(2 * m as usize - 2);
    let cc = 1.0 - 2f64.powi(2 * mi - 1);
    let z = riemann_zeta((2 * m - 1) as f64)?;
    let f = factorial(2 * m as u64 - 2);
    let v = -e / 8.0 * cc * PI.powi(2 * mi - 1) * z
        - cc * cc * f / 8.0 * z * z
        - e * e * PI.powi(4 * mi - 2) / (32.0 * f)
        - f / (2f64.powi(4 * mi - 1) * factorial(4 * m as u64 - 3))
            * polygamma_real(4 * m - 3, 0.75)?;
    Ok(c(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_point_polygamma_reduction() {
        for m in 2..=4u32 {
            let e = euler_number_abs_f64(2 * m as usize - 2);
            let mi = m as i32;
            let expect = 2f64.powi(2 * mi - 2)
                * ((1.0 - 2f64.powi(2 * mi - 1))
                    * factorial(2 * m as u64 - 2)
                    * riemann_zeta((2 * m - 1) as f64).unwrap()
                    + PI.powi(2 * mi - 1) * e / 2.0);
            let got = polygamma_real(2 * m - 2, 0.75).unwrap();
            assert!(
                (got - expect).abs() < 1e-11 * expect.abs().max(1.0),
                "m = {m}"
            );
        }
    }

    #[test]
    fn polygamma_form_is_the_hurwitz_form() {
        for (m, r, s) in [(2u32, 4.0, 1.0), (3, 4.0, 1.0)] {
            let p = mrs(m as f64, c(r), c(s));
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let scaled = h1_rhs(&p).unwrap() * (sign * factorial(m as u64 - 1));
            let d = (scaled - h2_rhs(&p).unwrap()).norm();
            assert!(d < 1e-10, "{m} {r} {s}: {d:e}");
        }
    }
}
