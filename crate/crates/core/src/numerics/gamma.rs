//! Digamma and polygamma functions on the complex plane.
//!
//! Both use upward recurrence until the argument is large enough for the
//! Stirling-type asymptotic expansion. Digamma additionally reflects
//! arguments with Re z < 1/2.

use num_complex::Complex64;

use super::constants::{EULER_GAMMA, PI};
use super::rational::{bernoulli_f64, factorial};
use crate::error::{fmt_c, Error, Result};

const ASYMPTOTIC_THRESHOLD: f64 = 10.0;
const MAX_ASYMPTOTIC_TERMS: usize = 40;

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::Pole {
            function: "digamma",
            at: fmt_c(z),
        });
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("digamma", "argument is not finite"));
    }
    if z.re < 0.5 {
        // ψ(z) = ψ(1 − z) − π cot(πz)
        let pz = z * PI;
        let cot = pz.cos() / pz.sin();
        return Ok(digamma_lifted(Complex64::new(1.0, 0.0) - z) - cot * PI);
    }
    Ok(digamma_lifted(z))
}

fn digamma_lifted(mut z: Complex64) -> Complex64 {
    let mut shift = Complex64::new(0.0, 0.0);
    while z.norm() < ASYMPTOTIC_THRESHOLD {
        shift += z.inv();
        z += 1.0;
    }
    // ψ(z) ~ ln z − 1/(2z) − ∑ B_{2k}/(2k z^{2k})
    let inv2 = (z * z).inv();
    let mut pow = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for k in 1..=MAX_ASYMPTOTIC_TERMS / 2 {
        let term = pow * (bernoulli_f64(2 * k) / (2 * k) as f64);
        series += term;
        if term.norm() < 1e-18 * series.norm() {
            break;
        }
        pow *= inv2;
    }
    z.ln() - z.inv() * 0.5 - series - shift
}

/// ψ_m(z), the m-th derivative of ψ (so `polygamma(1, z)` is the trigamma
/// function). Requires m ≥ 1.
pub fn polygamma(m: u32, z: Complex64) -> Result<Complex64> {
    if m == 0 {
        return digamma(z);
    }
    if is_pole(z) {
        return Err(Error::Pole {
            function: "polygamma",
            at: fmt_c(z),
        });
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("polygamma", "argument is not finite"));
    }
    let mf = m as f64;
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 }; // (−1)^{m+1}
    let m_fact = factorial(m as u64);

    // ψ_m(z) = ψ_m(z + 1) − (−1)^m m! z^{−m−1}
    let threshold = ASYMPTOTIC_THRESHOLD + mf;
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 1.0 || w.norm() < threshold {
        shift += w.powi(-(m as i32) - 1);
        w += 1.0;
    }

    // ψ_m(w) ~ (−1)^{m+1} [ (m−1)!/w^m + m!/(2w^{m+1})
    //                       + ∑ B_{2k} (2k+m−1)!/((2k)! w^{2k+m}) ]
    let inv = w.inv();
    let inv2 = inv * inv;
    let lead = inv.powi(m as i32);
    let mut acc = lead * factorial(m as u64 - 1) + lead * inv * (0.5 * m_fact);
    let mut pow = lead * inv2;
    // (2k+m−1)!/(2k)! built incrementally
    let mut ratio = factorial(m as u64 - 1) * mf * (mf + 1.0) / 2.0;
    for k in 1..=MAX_ASYMPTOTIC_TERMS / 2 {
        let term = pow * (bernoulli_f64(2 * k) * ratio);
        acc += term;
        if term.norm() < 1e-18 * acc.norm() {
            break;
        }
        pow *= inv2;
        let kk = k as f64;
        ratio *= (2.0 * kk + mf) * (2.0 * kk + mf + 1.0) / ((2.0 * kk + 1.0) * (2.0 * kk + 2.0));
    }
    let lifted = acc * sign;
    // (−1)^m m! = −sign·m!
    Ok(lifted + shift * (sign * m_fact))
}

/// ψ(x) for real x.
pub fn digamma_real(x: f64) -> Result<f64> {
    digamma(Complex64::new(x, 0.0)).map(|v| v.re)
}

/// ψ_m(x) for real x.
pub fn polygamma_real(m: u32, x: f64) -> Result<f64> {
    polygamma(m, Complex64::new(x, 0.0)).map(|v| v.re)
}

/// Harmonic number at a real argument, H_x = ψ(x + 1) + γ.
pub fn harmonic_real(x: f64) -> Result<f64> {
    if x.fract() == 0.0 && (0.0..=64.0).contains(&x) {
        let n = x as u64;
        return Ok((1..=n).map(|k| 1.0 / k as f64).rev().sum());
    }
    Ok(digamma_real(x + 1.0)? + EULER_GAMMA)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::harmonic;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn digamma_at_one_is_minus_gamma() {
        let v = digamma(c(1.0, 0.0)).unwrap();
        assert!((v.re + EULER_GAMMA).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn digamma_integer_shift_gives_harmonic() {
        let h6 = harmonic(6).unwrap().to_f64();
        let d = digamma_real(7.0).unwrap() - digamma_real(1.0).unwrap();
        assert!((d - h6).abs() < 1e-13);
    }

    #[test]
    fn digamma_recurrence_off_axis() {
        let z = c(0.3, 0.7);
        let r = digamma(z + 1.0).unwrap() - digamma(z).unwrap() - z.inv();
        assert!(r.norm() < 1e-13, "{r}");
    }

    #[test]
    fn digamma_poles_rejected() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(digamma(c(x, 0.0)), Err(Error::Pole { .. })));
            assert!(matches!(polygamma(2, c(x, 0.0)), Err(Error::Pole { .. })));
        }
        // near a pole is fine
        assert!(digamma(c(-1.0, 1e-3)).is_ok());
    }

    #[test]
    fn digamma_negative_real_by_reflection() {
        // ψ(−1/2) = 2 − γ − 2 ln 2
        let v = digamma_real(-0.5).unwrap();
        assert!((v - (2.0 - EULER_GAMMA - 2.0 * std::f64::consts::LN_2)).abs() < 1e-14);
    }

    #[test]
    fn polygamma_at_one() {
        let pi = PI;
        assert!((polygamma_real(1, 1.0).unwrap() - pi * pi / 6.0).abs() < 1e-15);
        assert!((polygamma_real(3, 1.0).unwrap() - pi.powi(4) / 15.0).abs() < 1e-14);
    }

    #[test]
    fn polygamma_recurrence() {
        for m in 1..=9u32 {
            let z = c(0.75, 0.25);
            let lhs = polygamma(m, z + 1.0).unwrap() - polygamma(m, z).unwrap();
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = z.powi(-(m as i32) - 1) * (sign * factorial(m as u64));
            assert!((lhs - rhs).norm() <= 1e-13 * rhs.norm(), "m = {m}");
        }
    }

    #[test]
    fn polygamma_zero_order_is_digamma() {
        let z = c(2.5, -1.0);
        assert_eq!(polygamma(0, z).unwrap(), digamma(z).unwrap());
    }

    #[test]
    fn harmonic_real_half_integer() {
        // H_{1/2} = 2 − 2 ln 2
        let v = harmonic_real(0.5).unwrap();
        assert!((v - (2.0 - 2.0 * std::f64::consts::LN_2)).abs() < 1e-15);
        assert!((harmonic_real(3.0).unwrap() - 11.0 / 6.0).abs() < 1e-16);
    }
}
