//! Euler sums, their generating functions and the auxiliary integrals.

use num_complex::Complex64;

use super::*;
use crate::numerics::constants::{PI, ZETA3};
use crate::registry::domain::param;
use crate::series::sum_series;

const ZETA2: f64 = PI * PI / 6.0;

pub(super) fn records() -> Vec<IdentityRecord> {
    let closed_disk = ParameterDomain::complex_disk("a", &[], 1.0, true);
    let gf = ParameterDomain::complex_disk("z", &[RealSet::point(0.0)], 1.0, false);
    let gf_slit = ParameterDomain::complex_disk("z", &[excl_below(0.0, true)], 1.0, false);
    let slit = ParameterDomain::complex("z", &[excl_below(0.0, true), excl_above(1.0, true)]);
    let e8a = ParameterDomain::complex_disk("a", &[excl_below(0.0, true)], 1.0, true);
    let e8b = ParameterDomain::complex_disk(
        "a",
        &[excl_below(-1.0, true), excl_above(0.0, true)],
        1.0,
        true,
    );
    let e8c = ParameterDomain::complex_disk("z", &[excl_below(0.0, true)], 1.0, true);
    let e9 = ParameterDomain::complex_disk("a", &[RealSet::point(-1.0)], 1.0, true);
    let aux = ParameterDomain::complex("a", &[excl_below(0.0, true)]);

    let gf_points = [c(0.2), c(0.5), c(0.8), ci(0.3, 0.4), c(-0.5), ci(-0.3, 0.5)];
    let gf_slit_points = [
        c(0.2),
        c(0.5),
        c(0.8),
        ci(0.3, 0.4),
        ci(-0.3, 0.5),
        ci(0.5, -0.8),
    ];
    let slit_points = [
        c(0.2),
        c(0.5),
        c(0.8),
        ci(0.3, 0.4),
        ci(-0.3, 0.5),
        ci(0.5, -0.8),
        ci(1.2, -0.3),
    ];
    let aux_points = [
        c(0.2),
        c(0.5),
        c(0.8),
        c(2.0),
        ci(0.3, 0.4),
        ci(0.5, -0.8),
        ci(-0.4, 0.9),
        ci(1.2, -0.3),
    ];

    vec![
        record(
            "E2",
            "Li₂(a)² = 4∑aᵏH_k/k³ + 2∑aᵏH⁽²⁾_k/k² − 6Li₄(a)",
            "(cauchy1)",
            closed_disk,
            e2_lhs,
            e2_rhs,
            one(
                "a",
                &[
                    c(0.5),
                    c(-0.5),
                    c(0.9),
                    ci(0.3, 0.4),
                    ci(0.5, -0.7),
                    ci(-0.6, 0.7),
                    c(-1.0),
                ],
            ),
        )
        .stress(one("a", &[ci(0.6, 0.75)])),
        record(
            "E3",
            "∑ H_k zᵏ/(k+1)",
            "(major5)",
            gf,
            e3_lhs,
            e3_rhs,
            one("z", &gf_points),
        ),
        record(
            "E4",
            "∑ H_k zᵏ/k²",
            "(harmo1)",
            gf_slit.clone(),
            e4_lhs,
            e4_rhs,
            one("z", &gf_slit_points),
        ),
        record(
            "E5",
            "∑ H_k zᵏ/k³",
            "(harmo2)",
            gf_slit,
            e5_lhs,
            e5_rhs,
            one("z", &gf_slit_points),
        ),
        record(
            "E6",
            "∫₀^z ln t ln²(1−t)/t dt",
            "(newinh1)",
            slit.clone(),
            e6_lhs,
            e6_rhs,
            one("z", &slit_points),
        ),
        record(
            "A5",
            "F(z) + F(1−z) with F(z) = ∫₀^z ln t ln²(1−t)/t dt",
            "(eulan2)",
            slit,
            a5_lhs,
            a5_rhs,
            one("z", &slit_points),
        ),
        record(
            "E8a",
            "∑ (−1)ᵏH_k aᵏ/k³ through Li₄(1/(1+a)) + Li₄(a/(1+a))",
            "(news1)",
            e8a,
            alt_cubic_lhs,
            e8a_rhs,
            one(
                "a",
                &[
                    c(0.2),
                    c(0.5),
                    c(0.8),
                    c(1.0),
                    ci(0.3, 0.4),
                    ci(0.5, -0.8),
                    ci(-0.4, 0.9),
                ],
            ),
        )
        .note(|_| Some("ln⁴(1+a) coefficient −1/4")),
        record(
            "E8b",
            "∑ (−1)ᵏH_k aᵏ/k³ through Li₄(1+a)",
            "(harmo21)",
            e8b,
            alt_cubic_lhs,
            e8b_rhs,
            one(
                "a",
                &[
                    c(-0.2),
                    c(-0.5),
                    c(-0.8),
                    ci(0.3, 0.4),
                    ci(0.5, -0.8),
                    ci(-0.4, 0.9),
                ],
            ),
        ),
        record(
            "E8c",
            "∑ (−1)ᵏH_k zᵏ/k²",
            "(stah12)",
            e8c.clone(),
            e8c_lhs,
            e8c_rhs,
            one(
                "z",
                &[c(0.2), c(0.5), c(0.8), c(1.0), ci(0.3, 0.4), ci(-0.3, 0.5)],
            ),
        ),
        record(
            "E8d",
            "∑ (−1)ᵏH_k z^{k+1}/(k+1)²",
            "(lastheq1)",
            e8c,
            e8d_lhs,
            e8d_rhs,
            one(
                "z",
                &[c(0.2), c(0.5), c(0.8), c(1.0), ci(0.3, 0.4), ci(-0.3, 0.5)],
            ),
        ),
        record(
            "E9",
            "∑ (−1)ᵏH_k aᵏ/k³ + ½∫₀¹ ln t ln²(1+at)/t dt = Li₄(−a)",
            "(major11) ≡ (simha2)",
            e9,
            e9_lhs,
            e9_rhs,
            one(
                "a",
                &[
                    c(0.2),
                    c(0.5),
                    c(0.8),
                    c(1.0),
                    c(-0.5),
                    ci(0.3, 0.4),
                    ci(0.5, -0.8),
                    ci(-0.4, 0.9),
                ],
            ),
        ),
        record(
            "A1",
            "∫₀^{1/(1+a)} ln³t/(1−t) dt",
            "(frsin1)",
            aux.clone(),
            a1_lhs,
            a1_rhs,
            one("a", &aux_points),
        ),
        record(
            "A2",
            "∫₀^{a/(1+a)} ln²(1−t)/t dt",
            "(frsin2)",
            aux.clone(),
            a2_lhs,
            a2_rhs,
            one("a", &aux_points),
        ),
        record(
            "A3",
            "∫₀^a (ζ(3) − Li₃(1/(1+t)))/t dt",
            "(combh1)",
            aux.clone(),
            a3_lhs,
            a3_rhs,
            one("a", &aux_points),
        )
        .note(|_| Some("weight-4 term ½ ln²a ln²(1+a)")),
        record(
            "A4",
            "∫₀^a ln(1+t) Li₂(1/(1+t))/t dt",
            "(combh2)",
            aux,
            a4_lhs,
            a4_rhs,
            one("a", &aux_points),
        ),
    ]
}

/// ∑_{k≥1} c_k zᵏ where `coeff` yields c_k in order and `bound` bounds the
/// (non-negative, non-increasing) coefficients.
fn power_series<F, B>(z: Complex64, mut coeff: F, bound: B, tol: f64) -> Result<Estimate>
where
    F: FnMut(u64) -> f64,
    B: Fn(u64) -> f64,
{
    let mut zk = c(1.0);
    let r = sum_series(
        |k| {
            zk *= z;
            zk * coeff(k)
        },
        abel_tail(z, bound),
        tol,
    )?;
    Ok(Estimate::series(r))
}

fn h_over_power(p: i32) -> impl FnMut(u64) -> f64 {
    let mut h = 0.0;
    move |k| {
        let kf = k as f64;
        h += 1.0 / kf;
        h / kf.powi(p)
    }
}

fn h_bound_power(p: i32) -> impl Fn(u64) -> f64 {
    move |k| harmonic_bound(k) / (k as f64).powi(p)
}

fn e2_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let a = param(p, "a")?;
    let mut h = 0.0;
    let mut h2 = 0.0;
    power_series(
        a,
        |k| {
            let kf = k as f64;
            h += 1.0 / kf;
            h2 += 1.0 / (kf * kf);
            4.0 * h / (kf * kf * kf) + 2.0 * h2 / (kf * kf)
        },
        |k| {
            let kf = k as f64;
            4.0 * harmonic_bound(k) / (kf * kf * kf) + 2.0 * ZETA2 / (kf * kf)
        },
        tol,
    )
}

fn e2_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let l2 = li2(a)?;
    Ok(l2 * l2 + li4(a)? * 6.0)
}

fn e3_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let z = param(p, "z")?;
    let mut h = 0.0;
    power_series(
        z,
        |k| {
            let kf = k as f64;
            h += 1.0 / kf;
            h / (kf + 1.0)
        },
        |k| harmonic_bound(k) / (k as f64 + 1.0),
        tol,
    )
}

fn e3_rhs(p: &Params) -> Result<Complex64> {
    let z = param(p, "z")?;
    let l = ln1p(-z);
    Ok(l * l / (z * 2.0))
}

fn e4_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    power_series(param(p, "z")?, h_over_power(2), h_bound_power(2), tol)
}

fn e4_rhs(p: &Params) -> Result<Complex64> {
    let z = param(p, "z")?;
    let w = c(1.0) - z;
    let l = ln1p(-z);
    Ok(c(ZETA3) + li2(w)? * l + li3(z)? - li3(w)? + ln(z) * l * l * 0.5)
}

fn e5_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    power_series(param(p, "z")?, h_over_power(3), h_bound_power(3), tol)
}

fn e5_rhs(p: &Params) -> Result<Complex64> {
    let z = param(p, "z")?;
    let w = c(1.0) - z;
    let l = ln1p(-z);
    let l2 = l * l;
    Ok(
        c(PI.powi(4) / 90.0) + l * ZETA3 + l2 * (PI * PI / 12.0) + l2 * l2 / 24.0
            - ln(z) * l2 * l / 6.0
            - l * li3(z)?
            + li4(z)? * 2.0
            - li4(w)?
            + li4(z / (z - 1.0))?,
    )
}

/// F(z) = ∫₀^z ln t ln²(1−t)/t dt along the segment.
fn f_integral(z: Complex64, tol: f64) -> Result<Estimate> {
    segment_integral(
        z,
        |t| {
            let l = ln1p(-t);
            ln(t) * l * l * recip(t)
        },
        tol,
    )
}

fn e6_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    f_integral(param(p, "z")?, tol)
}

fn e6_rhs(p: &Params) -> Result<Complex64> {
    let z = param(p, "z")?;
    let w = c(1.0) - z;
    let l = ln1p(-z);
    let lz = ln(z);
    let l2 = l * l;
    Ok(
        c(-PI.powi(4) / 45.0) - l * (2.0 * ZETA3) - l2 * ZETA2 - l2 * l2 / 12.0
            + lz * l2 * l / 3.0
            + l * li3(z)? * 2.0
            - li4(z)? * 2.0
            + li4(w)? * 2.0
            - li4(z / (z - 1.0))? * 2.0
            + lz * (2.0 * ZETA3)
            + lz * l * li2(w)? * 2.0
            - lz * li3(w)? * 2.0
            + lz * lz * l2,
    )
}

fn a5_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let z = param(p, "z")?;
    Ok(f_integral(z, 0.5 * tol)? + f_integral(c(1.0) - z, 0.5 * tol)?)
}

fn a5_rhs(p: &Params) -> Result<Complex64> {
    let z = param(p, "z")?;
    let lz = ln(z);
    let l = ln1p(-z);
    Ok(c(-PI.powi(4) / 180.0) + lz * lz * l * l * 0.5)
}

/// ∑ (−1)ᵏH_k aᵏ/k³
fn alt_cubic(a: Complex64, tol: f64) -> Result<Estimate> {
    power_series(-a, h_over_power(3), h_bound_power(3), tol)
}

fn alt_cubic_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    alt_cubic(param(p, "a")?, tol)
}

fn e8a_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let u = (a + 1.0).inv();
    let v = a * u;
    let la = ln(a);
    let l1 = ln1p(a);
    let l2 = l1 * l1;
    Ok(
        c(-PI.powi(4) / 90.0) + l2 * (PI * PI / 12.0) + la * l2 * l1 / 3.0 - l2 * l2 * 0.25
            + l1 * (li3(u)? + li3(v)?)
            + li4(-a)? * 2.0
            + li4(u)?
            + li4(v)?,
    )
}

fn e8b_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let l1 = ln1p(a);
    let l2 = l1 * l1;
    Ok(
        c(PI.powi(4) / 90.0) + l1 * ZETA3 + l2 * (PI * PI / 12.0) + l2 * l2 / 24.0
            - ln(-a) * l2 * l1 / 6.0
            - l1 * li3(-a)?
            + li4(-a)? * 2.0
            - li4(a + 1.0)?
            + li4(a / (a + 1.0))?,
    )
}

fn e8c_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    power_series(-param(p, "z")?, h_over_power(2), h_bound_power(2), tol)
}

fn e8c_rhs(p: &Params) -> Result<Complex64> {
    let z = param(p, "z")?;
    let l1 = ln1p(z);
    let u = (z + 1.0).inv();
    Ok(c(ZETA3) - l1 * l1 * l1 / 3.0 + li3(-z)? - li3(u)? - l1 * li2(u)? + ln(z) * l1 * l1 * 0.5)
}

/// z ∑ (−1)ᵏH_k zᵏ/(k+1)²
fn e8d_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let z = param(p, "z")?;
    let mut h = 0.0;
    let s = power_series(
        -z,
        |k| {
            let kf = k as f64;
            h += 1.0 / kf;
            h / ((kf + 1.0) * (kf + 1.0))
        },
        |k| harmonic_bound(k) / ((k as f64 + 1.0) * (k as f64 + 1.0)),
        tol / z.norm().max(1e-300),
    )?;
    Ok(s * z)
}

fn e8d_rhs(p: &Params) -> Result<Complex64> {
    let z = param(p, "z")?;
    let l1 = ln1p(z);
    let u = (z + 1.0).inv();
    Ok(c(-ZETA3) + l1 * l1 * l1 / 3.0 + li3(u)? + l1 * li2(u)? - ln(z) * l1 * l1 * 0.5)
}

fn e9_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let a = param(p, "a")?;
    Ok(alt_cubic(a, 0.5 * tol)? + super::integrals::b_integral(a, tol)? * 0.5)
}

fn e9_rhs(p: &Params) -> Result<Complex64> {
    li4(-param(p, "a")?)
}

/// u = 1/(1+a), ln a, ln(1+a)
fn aux_values(a: Complex64) -> (Complex64, Complex64, Complex64) {
    ((a + 1.0).inv(), ln(a), ln1p(a))
}

fn a1_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let (u, _, _) = aux_values(param(p, "a")?);
    segment_integral(
        u,
        |t| {
            let l = ln(t);
            l * l * l / (c(1.0) - t)
        },
        tol,
    )
}

fn a1_rhs(p: &Params) -> Result<Complex64> {
    let (u, la, l1) = aux_values(param(p, "a")?);
    let l2 = l1 * l1;
    Ok((la - l1) * l2 * l1 - l2 * li2(u)? * 3.0 - l1 * li3(u)? * 6.0 - li4(u)? * 6.0)
}

fn a2_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let a = param(p, "a")?;
    segment_integral(
        a / (a + 1.0),
        |t| {
            let l = ln1p(-t);
            l * l * recip(t)
        },
        tol,
    )
}

fn a2_rhs(p: &Params) -> Result<Complex64> {
    let (u, la, l1) = aux_values(param(p, "a")?);
    Ok(c(2.0 * ZETA3) - li3(u)? * 2.0 + (la - l1) * l1 * l1 - l1 * li2(u)? * 2.0)
}

/// ln³(1+t)/t, the integral that both combination identities carry.
fn cube_log(t: Complex64) -> Complex64 {
    let l = ln1p(t);
    l * l * l * recip(t)
}

/// ∫₀^a [(ζ(3) − Li₃(1/(1+t)))/t + ln³(1+t)/(6t)] dt
fn a3_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let a = param(p, "a")?;
    segment_integral(
        a,
        |t| {
            let v = li3((t + 1.0).inv()).unwrap_or(c(f64::NAN));
            (c(ZETA3) - v) * recip(t) + cube_log(t) / 6.0
        },
        tol,
    )
}

fn a3_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let (u, la, l1) = aux_values(a);
    let l2u = li2(u)?;
    let l2a = li2(-a)?;
    Ok(
        la * (c(ZETA3) - li3(u)?) - la * l1 * l2u - l2u * l2a + la * l1 * l2a - l1 * l1 * l2a * 0.5
            + l2a * l2a * 0.5
            + la * la * l1 * l1 * 0.5
            - la * l1 * l1 * l1 / 3.0,
    )
}

/// ∫₀^a [ln(1+t) Li₂(1/(1+t)) + ln³(1+t)/2 − ln t ln²(1+t)]/t dt
fn a4_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let a = param(p, "a")?;
    segment_integral(
        a,
        |t| {
            let l = ln1p(t);
            let v = li2((t + 1.0).inv()).unwrap_or(c(f64::NAN));
            (l * v - ln(t) * l * l) * recip(t) + cube_log(t) * 0.5
        },
        tol,
    )
}

fn a4_rhs(p: &Params) -> Result<Complex64> {
    let a = param(p, "a")?;
    let (u, la, l1) = aux_values(a);
    let l2a = li2(-a)?;
    Ok(-li2(u)? * l2a + l2a * la * l1 + l2a * l2a * 0.5 - l1 * l1 * l2a * 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_representations_agree_off_both_rays() {
        for a in [
            ci(0.3, 0.4),
            ci(0.5, -0.8),
            ci(-0.4, 0.9),
            ci(1.2, -0.3),
            ci(2.0, 1.0),
            ci(-3.0, 0.5),
        ] {
            let p = params(&[("a", a)]);
            let d = (e8a_rhs(&p).unwrap() - e8b_rhs(&p).unwrap()).norm();
            assert!(d < 1e-10, "a = {a}: {d:e}");
        }
    }

    #[test]
    fn generating_functions_by_direct_summation() {
        for z in [c(0.2), c(0.5), c(0.8), ci(0.3, 0.4)] {
            let p = params(&[("z", z)]);
            let pairs: [(LhsFn, RhsFn); 3] = [(e3_lhs, e3_rhs), (e4_lhs, e4_rhs), (e5_lhs, e5_rhs)];
            for (l, r) in pairs {
                let d = (l(&p, 1e-12).unwrap().value() - r(&p).unwrap()).norm();
                assert!(d < 1e-10, "z = {z}: {d:e}");
            }
        }
    }
}
