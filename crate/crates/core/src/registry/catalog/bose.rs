//! Series of Bose-kernel integrals from Hermite's representation.

use num_complex::Complex64;

use super::*;
use crate::error::Error;
use crate::numerics::constants::{PI, ZETA11, ZETA13, ZETA3, ZETA5, ZETA7, ZETA9};
use crate::numerics::rational::{bernoulli_f64, binomial, factorial};
use crate::numerics::zeta::riemann_zeta;
use crate::polylog::hurwitz_zeta_em;
use crate::registry::domain::{int_param, real_param};
use crate::series::{sether_expansion, BoseFamily, BoseTerm};

pub(super) fn records() -> Vec<IdentityRecord> {
    let mrs = |m: f64, r: f64, s: f64| params(&[("m", c(m)), ("r", c(r)), ("s", c(s))]);
    let family_domain = |lo: i64| {
        ParameterDomain::Composite(vec![
            ParameterDomain::integers("m", lo, i64::MAX),
            ParameterDomain::real("r", RealSet::above(0.0, false)),
            ParameterDomain::real("s", RealSet::open(f64::NEG_INFINITY, f64::INFINITY)),
        ])
    };
    let m_from = |lo: i64| ParameterDomain::integers("m", lo, i64::MAX);
    let m123 = one("m", &[c(1.0), c(2.0), c(3.0)]);
    let m2345 = one("m", &[c(2.0), c(3.0), c(4.0), c(5.0)]);
    vec![
        record(
            "B1",
            "∑_k ∑_p C(m,p) sin(π(m−p)/2)/(r^p q^{m−p}) ∫ x^{m−p}/((r²x²+q²)^m (e^{2πx}−1)) dx, q = rk−s",
            "Theorem bghaft \"Employing Hermite's integral representation\"",
            family_domain(2),
            b1_lhs,
            b1_rhs,
            vec![mrs(2.0, 1.0, 0.0), mrs(2.0, 2.0, 1.0), mrs(3.0, 1.0, 0.0), mrs(3.0, 2.0, 1.0), mrs(4.0, 1.0, 0.0), mrs(2.0, 3.0, 0.5)],
        ),
        record(
            "B1o",
            "even order 2m of the Hermite family",
            "Corollary bghaft1o",
            family_domain(1),
            b1o_lhs,
            b1o_rhs,
            vec![mrs(1.0, 1.0, 0.0), mrs(1.0, 2.0, 1.0), mrs(2.0, 1.0, 0.0), mrs(2.0, 3.0, 0.5)],
        ),
        record(
            "B1e",
            "odd order 2m+1 of the Hermite family",
            "Corollary bghaft2o",
            family_domain(1),
            b1e_lhs,
            b1e_rhs,
            vec![mrs(1.0, 1.0, 0.0), mrs(1.0, 2.0, 1.0), mrs(2.0, 1.0, 0.0), mrs(1.0, 3.0, 0.5)],
        ),
        record("C1", "Hermite family at r = 1, s = 0", "Corollary corol1h1h", m_from(2), c1_lhs, c1_rhs, m2345.clone()),
        record("C2", "Hermite family at r = 2, s = 1", "Corollary corol1h", m_from(2), c2_lhs, c2_rhs, m2345),
        record("B2", "even order, r = 1, s = 0, Bernoulli form", "Corollary corol1", m_from(1), b2_lhs, b2_rhs, m123.clone()),
        record("B3", "odd order, r = 1, s = 0", "Corollary corol2", m_from(1), b3_lhs, b3_rhs, m123.clone()),
        record("B4", "even order, r = 2, s = 1, Bernoulli form", "Corollary corol3", m_from(1), b4_lhs, b4_rhs, m123.clone()),
        record("B5", "odd order, r = 2, s = 1", "Corollary corol4", m_from(1), b5_lhs, b5_rhs, m123.clone()),
        record(
            "B2e",
            "worked examples, ∑_k (1/k) ∫ x/((x²+k²)²(e^{2πx}−1)) dx and higher m",
            "Examples after corol1 \"= π⁴/288 − ζ(3)/4\"",
            ParameterDomain::integers("m", 1, 3),
            ex2_lhs,
            ex2_rhs,
            m123.clone(),
        ),
        record(
            "B3e",
            "worked examples, odd order, r = 1",
            "Examples after corol2 \"ζ²(3)/4 − ζ(5)/4\"",
            ParameterDomain::integers("m", 1, 3),
            ex3_lhs,
            ex3_rhs,
            m123.clone(),
        ),
        record(
            "B4e",
            "worked examples, odd k, ∑_k ∫ x/((4x²+(2k−1)²)²(e^{2πx}−1)) dx/(2k−1) and higher m",
            "Examples after corol3 \"π⁴/1024 − 7ζ(3)/128\"",
            ParameterDomain::integers("m", 1, 3),
            ex4_lhs,
            ex4_rhs,
            m123.clone(),
        ),
        record(
            "B5e",
            "worked examples, odd order, odd k",
            "Examples after corol4",
            ParameterDomain::integers("m", 1, 3),
            ex5_lhs,
            ex5_rhs,
            m123,
        ),
        record(
            "S1",
            "∫₀^∞ sin(m arctan(x/z))/((x²+z²)^{m/2}(e^{2πx}−1)) dx by binomial expansion",
            "(sether1)",
            ParameterDomain::Composite(vec![
                ParameterDomain::integers("m", 2, i64::MAX),
                ParameterDomain::real("z", RealSet::above(0.0, false)),
            ]),
            s1_lhs,
            s1_rhs,
            [(2.0, 1.0), (3.0, 1.0), (4.0, 0.5), (2.0, 2.5), (5.0, 0.3)]
                .iter()
                .map(|&(m, z)| params(&[("m", c(m)), ("z", c(z))]))
                .collect(),
        ),
    ]
}

fn family_params(p: &Params) -> Result<(u32, f64, f64)> {
    Ok((int_param(p, "m")?, real_param(p, "r")?, real_param(p, "s")?))
}

fn sum_family(f: BoseFamily, tol: f64) -> Result<Estimate> {
    Ok(Estimate::series(f.sum(tol)?))
}

/// ζ(m, w)²/(4r^{3m}) − ζ(2m−1, w)/(2r^{3m}(m−1)), w = (r − s)/r.
fn hermite_rhs(m: u32, r: f64, s: f64) -> Result<f64> {
    if m < 2 {
        return Err(Error::domain("hermite family", "requires m ≥ 2"));
    }
    let w = (r - s) / r;
    let mf = m as f64;
    let z = hurwitz_zeta_em(mf, w)?;
    let r3 = r.powi(3 * m as i32);
    Ok(z * z / (4.0 * r3) - hurwitz_zeta_em(2.0 * mf - 1.0, w)? / (2.0 * r3 * (mf - 1.0)))
}

fn b1_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let (m, r, s) = family_params(p)?;
    sum_family(BoseFamily::hermite(m, r, s)?, tol)
}

fn b1_rhs(p: &Params) -> Result<Complex64> {
    let (m, r, s) = family_params(p)?;
    Ok(c(hermite_rhs(m, r, s)?))
}

fn sign(n: u32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Order 2m written with (−1)^{m+p−1} C(2m, 2p+1).
fn even_family(m: u32, r: f64, s: f64) -> Result<BoseFamily> {
    let terms = (0..m)
        .map(|p| BoseTerm {
            coeff: sign(m + p + 1) * binomial(2 * m as u64, 2 * p as u64 + 1),
            r_power: 2 * p as i32 + 1,
            q_power: (2 * m - 2 * p - 1) as i32,
            x_power: 2 * m - 2 * p - 1,
        })
        .collect();
    BoseFamily::new(terms, 2 * m, r, s)
}

/// Order 2m+1 written with (−1)^{m+p} C(2m+1, 2p).
fn odd_family(m: u32, r: f64, s: f64) -> Result<BoseFamily> {
    let terms = (0..=m)
        .map(|p| BoseTerm {
            coeff: sign(m + p) * binomial(2 * m as u64 + 1, 2 * p as u64),
            r_power: 2 * p as i32,
            q_power: (2 * m - 2 * p + 1) as i32,
            x_power: 2 * m - 2 * p + 1,
        })
        .collect();
    BoseFamily::new(terms, 2 * m + 1, r, s)
}

fn b1o_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let (m, r, s) = family_params(p)?;
    sum_family(even_family(m, r, s)?, tol)
}

fn b1o_rhs(p: &Params) -> Result<Complex64> {
    let (m, r, s) = family_params(p)?;
    let w = (r - s) / r;
    let mf = m as f64;
    let r6 = r.powi(6 * m as i32);
    let z = hurwitz_zeta_em(2.0 * mf, w)?;
    Ok(c(z * z / (4.0 * r6)
        - hurwitz_zeta_em(4.0 * mf - 1.0, w)?
            / (2.0 * r6 * (2.0 * mf - 1.0))))
}

fn b1e_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let (m, r, s) = family_params(p)?;
    sum_family(odd_family(m, r, s)?, tol)
}

fn b1e_rhs(p: &Params) -> Result<Complex64> {
    let (m, r, s) = family_params(p)?;
    let w = (r - s) / r;
    let mf = m as f64;
    let r6 = r.powi(6 * m as i32 + 3);
    let z = hurwitz_zeta_em(2.0 * mf + 1.0, w)?;
    Ok(c(
        z * z / (4.0 * r6) - hurwitz_zeta_em(4.0 * mf + 1.0, w)? / (4.0 * r6 * mf)
    ))
}

fn c1_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    sum_family(BoseFamily::hermite(int_param(p, "m")?, 1.0, 0.0)?, tol)
}

fn c1_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")? as f64;
    let z = riemann_zeta(m)?;
    Ok(c(
        z * z / 4.0 - riemann_zeta(2.0 * m - 1.0)? / (2.0 * (m - 1.0))
    ))
}

fn c2_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    sum_family(BoseFamily::hermite(int_param(p, "m")?, 2.0, 1.0)?, tol)
}

fn c2_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")?;
    let mi = m as i32;
    let mf = m as f64;
    let z = riemann_zeta(mf)?;
    let a = 2f64.powi(-3 * mi - 2) * (2f64.powi(mi) - 1.0).powi(2) * z * z;
    let b = 2f64.powi(-3 * mi - 1) * (2f64.powi(2 * mi - 1) - 1.0) / (mf - 1.0)
        * riemann_zeta(2.0 * mf - 1.0)?;
    Ok(c(a - b))
}

fn b2_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    sum_family(even_family(int_param(p, "m")?, 1.0, 0.0)?, tol)
}

/// B_{2m}² π^{4m}/(2m)!²
fn bernoulli_square(m: u32) -> f64 {
    let b = bernoulli_f64(2 * m as usize);
    let f = factorial(2 * m as u64);
    b * b * PI.powi(4 * m as i32) / (f * f)
}

fn b2_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")?;
    let mi = m as i32;
    let v = 2f64.powi(4 * mi - 4) * bernoulli_square(m)
        - riemann_zeta((4 * m - 1) as f64)? / (2.0 * (2 * m - 1) as f64);
    Ok(c(v))
}

fn b3_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    sum_family(odd_family(int_param(p, "m")?, 1.0, 0.0)?, tol)
}

fn b3_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")? as f64;
    let z = riemann_zeta(2.0 * m + 1.0)?;
    Ok(c(z * z / 4.0 - riemann_zeta(4.0 * m + 1.0)? / (4.0 * m)))
}

fn b4_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    sum_family(even_family(int_param(p, "m")?, 2.0, 1.0)?, tol)
}

fn b4_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")?;
    let mi = m as i32;
    let a = 2f64.powi(-2 * mi - 4) * (2f64.powi(2 * mi) - 1.0).powi(2) * bernoulli_square(m);
    let b = 2f64.powi(-6 * mi - 1) * (2f64.powi(4 * mi - 1) - 1.0) / (2 * m - 1) as f64
        * riemann_zeta((4 * m - 1) as f64)?;
    Ok(c(a - b))
}

fn b5_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    sum_family(odd_family(int_param(p, "m")?, 2.0, 1.0)?, tol)
}

fn b5_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")?;
    let mi = m as i32;
    let z = riemann_zeta((2 * m + 1) as f64)?;
    let a = 2f64.powi(-6 * mi - 5) * (2f64.powi(2 * mi + 1) - 1.0).powi(2) * z * z;
    let b = 2f64.powi(-6 * mi - 4) * (2f64.powi(4 * mi + 1) - 1.0) / (2 * m) as f64
        * riemann_zeta((4 * m + 1) as f64)?;
    Ok(c(a - b))
}

/// A worked example: (coefficient, power n) pairs, kernel power, whether
/// k runs over odd numbers only, and the stated value.
struct Example {
    terms: &'static [(f64, u32)],
    kernel: u32,
    odd: bool,
    value: fn() -> f64,
}

fn example(id_prefix: char, m: u32) -> Option<Example> {
    let e = |terms, kernel, odd, value| {
        Some(Example {
            terms,
            kernel,
            odd,
            value,
        })
    };
    match (id_prefix, m) {
        ('2', 1) => e(&[(1.0, 1)], 2, false, || PI.powi(4) / 288.0 - ZETA3 / 4.0),
        ('2', 2) => e(&[(1.0, 1), (-1.0, 3)], 4, false, || {
            PI.powi(8) / 129600.0 - ZETA7 / 24.0
        }),
        ('2', 3) => e(&[(6.0, 1), (-20.0, 3), (6.0, 5)], 6, false, || {
            PI.powi(12) / 3572100.0 - ZETA11 / 10.0
        }),
        ('3', 1) => e(&[(3.0, 1), (-1.0, 3)], 3, false, || {
            ZETA3 * ZETA3 / 4.0 - ZETA5 / 4.0
        }),
        ('3', 2) => e(&[(5.0, 1), (-10.0, 3), (1.0, 5)], 5, false, || {
            ZETA5 * ZETA5 / 4.0 - ZETA9 / 8.0
        }),
        ('3', 3) => e(
            &[(7.0, 1), (-35.0, 3), (21.0, 5), (-1.0, 7)],
            7,
            false,
            || ZETA7 * ZETA7 / 4.0 - ZETA13 / 12.0,
        ),
        ('4', 1) => e(&[(1.0, 1)], 2, true, || {
            PI.powi(4) / 1024.0 - 7.0 * ZETA3 / 128.0
        }),
        ('4', 2) => e(&[(0.5, 1), (-2.0, 3)], 4, true, || {
            PI.powi(8) / 589824.0 - 127.0 * ZETA7 / 24576.0
        }),
        ('4', 3) => e(&[(0.1875, 1), (-2.5, 3), (3.0, 5)], 6, true, || {
            PI.powi(12) / 235929600.0 - 2047.0 * ZETA11 / 2621440.0
        }),
        ('5', 1) => e(&[(0.75, 1), (-1.0, 3)], 3, true, || {
            49.0 * ZETA3 * ZETA3 / 2048.0 - 31.0 * ZETA5 / 2048.0
        }),
        ('5', 2) => e(&[(0.3125, 1), (-2.5, 3), (1.0, 5)], 5, true, || {
            961.0 * ZETA5 * ZETA5 / 131072.0 - 511.0 * ZETA9 / 262144.0
        }),
        ('5', 3) => e(
            &[(0.109375, 1), (-2.1875, 3), (5.25, 5), (-1.0, 7)],
            7,
            true,
            || 16129.0 * ZETA7 * ZETA7 / 8388608.0 - 8191.0 * ZETA13 / 25165824.0,
        ),
        _ => None,
    }
}

fn example_for(family: char, p: &Params) -> Result<Example> {
    let m = int_param(p, "m")?;
    example(family, m)
        .ok_or_else(|| Error::domain("worked example", format!("no example for m = {m}")))
}

/// Σ_k Σ_i cᵢ/qⁿⁱ ∫ xⁿⁱ/((c x² + q²)^M (e^{2πx} − 1)) dx with q = k (c = 1)
/// or q = 2k − 1 (c = 4).
fn example_family(ex: &Example) -> Result<BoseFamily> {
    let terms = ex
        .terms
        .iter()
        .map(|&(coeff, n)| BoseTerm {
            coeff,
            r_power: 0,
            q_power: n as i32,
            x_power: n,
        })
        .collect();
    if ex.odd {
        BoseFamily::new(terms, ex.kernel, 2.0, 1.0)
    } else {
        BoseFamily::new(terms, ex.kernel, 1.0, 0.0)
    }
}

fn example_lhs(family: char, p: &Params, tol: f64) -> Result<Estimate> {
    sum_family(example_family(&example_for(family, p)?)?, tol)
}

fn example_rhs(family: char, p: &Params) -> Result<Complex64> {
    Ok(c((example_for(family, p)?.value)()))
}

fn ex2_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    example_lhs('2', p, tol)
}
fn ex2_rhs(p: &Params) -> Result<Complex64> {
    example_rhs('2', p)
}
fn ex3_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    example_lhs('3', p, tol)
}
fn ex3_rhs(p: &Params) -> Result<Complex64> {
    example_rhs('3', p)
}
fn ex4_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    example_lhs('4', p, tol)
}
fn ex4_rhs(p: &Params) -> Result<Complex64> {
    example_rhs('4', p)
}
fn ex5_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    example_lhs('5', p, tol)
}
fn ex5_rhs(p: &Params) -> Result<Complex64> {
    example_rhs('5', p)
}

fn s1_lhs(p: &Params, tol: f64) -> Result<Estimate> {
    let m = int_param(p, "m")?;
    let z = real_param(p, "z")?;
    Estimate::quad(sether_expansion(m, z, tol)?)
}

fn s1_rhs(p: &Params) -> Result<Complex64> {
    let m = int_param(p, "m")? as f64;
    let z = real_param(p, "z")?;
    let head = z.powf(-m) / 2.0 + z.powf(1.0 - m) / (m - 1.0);
    Ok(c((hurwitz_zeta_em(m, z)? - head) / 2.0))
}
