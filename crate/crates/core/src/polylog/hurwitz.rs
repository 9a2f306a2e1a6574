//! Hurwitz zeta ζ(s, z) = ∑_{n≥0} (n + z)^{−s}.

use num_complex::Complex64;

use crate::error::{fmt_c, Error, Result};
use crate::numerics::rational::{bernoulli_f64, factorial};
use crate::quadrature::{bose, bose_times_x, exp_sinh, QuadOptions};

const SMALL_X: f64 = 1e-3;

fn check_order(s: f64, function: &'static str) -> Result<()> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain(
            function,
            format!("requires real s > 1, got {s}"),
        ));
    }
    Ok(())
}

/// ζ(s, z) from Hermite's representation
///
/// ζ(s, z) = z^{−s}/2 + z^{1−s}/(s − 1)
///           + 2∫₀^∞ sin(s·arctan(x/z)) / ((x² + z²)^{s/2} (e^{2πx} − 1)) dx,
///
/// valid for Re z > 0. For complex z the sine quotient is
/// ((z − ix)^{−s} − (z + ix)^{−s})/(2i).
pub fn hurwitz_zeta(s: f64, z: Complex64) -> Result<Complex64> {
    check_order(s, "hurwitz_zeta")?;
    if !(z.re > 0.0) || !z.im.is_finite() {
        return Err(Error::domain(
            "hurwitz_zeta",
            format!("requires Re z > 0, got z = {}", fmt_c(z)),
        ));
    }
    let zs = z.powf(-s);
    let head = zs * 0.5 + z * zs / (s - 1.0);
    let r = hermite_integral(s, z, 1e-17 * head.norm());
    let r = r.require_converged()?;
    Ok(head + r.value * 2.0)
}

/// ∫₀^∞ sin(s·arctan(x/z)) / ((x² + z²)^{s/2} (e^{2πx} − 1)) dx.
pub(crate) fn hermite_integral(
    s: f64,
    z: Complex64,
    abs_tol: f64,
) -> crate::quadrature::QuadratureResult {
    let i = Complex64::new(0.0, 1.0);
    let zinv = z.inv();
    let lead = z.powf(-s) * zinv;
    // odd-order Taylor coefficients κ_n of the sine quotient in y = x/z,
    // κ_n = (−1)^{(n−1)/2} (s)_n / n!
    let mut kappa = [0.0f64; 5];
    let mut poch = 1.0;
    for n in 1..=9usize {
        poch *= s + (n - 1) as f64;
        if n % 2 == 1 {
            let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
            kappa[n / 2] = sign * poch / factorial(n as u64);
        }
    }
    let f = move |x: f64| -> Complex64 {
        if x < SMALL_X {
            let y = zinv * x;
            let y2 = y * y;
            let mut acc = Complex64::new(kappa[4], 0.0);
            for c in kappa[..4].iter().rev() {
                acc = acc * y2 + c;
            }
            // (sine quotient / x) · x/(e^{2πx} − 1)
            lead * acc * bose_times_x(x)
        } else {
            let num = ((z - i * x).powf(-s) - (z + i * x).powf(-s)) / (2.0 * i);
            num * bose(x)
        }
    };
    exp_sinh(&f, 0.0, QuadOptions::abs(abs_tol).with_rel(1e-15))
}

/// ζ(s, z) for real s > 1, z > 0 by Euler–Maclaurin summation with the
/// B₂, B₄, B₆ corrections. N is chosen so the first omitted (B₈) correction
/// is below 1e−16 of the integral term.
pub fn hurwitz_zeta_em(s: f64, z: f64) -> Result<f64> {
    check_order(s, "hurwitz_zeta_em")?;
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain(
            "hurwitz_zeta_em",
            format!("requires z > 0, got {z}"),
        ));
    }
    // (s)_7 |B₈| / 8!
    let mut poch7 = 1.0;
    for j in 0..7 {
        poch7 *= s + j as f64;
    }
    let b8 = bernoulli_f64(8).abs() / factorial(8) * poch7;
    // need b8·w^{−s−7} ≤ 1e−16·w^{1−s}/(s − 1), i.e. w^8 ≥ b8 (s − 1)·1e16
    let w_min = (b8 * (s - 1.0) * 1e16).powf(0.125);
    let n = if z >= w_min {
        0
    } else {
        (w_min - z).ceil() as usize
    };
    let w = n as f64 + z;

    let mut head = 0.0;
    for k in (0..n).rev() {
        head += (k as f64 + z).powf(-s);
    }
    let ws = w.powf(-s);
    let mut tail = w * ws / (s - 1.0) + 0.5 * ws;
    let mut poch = s; // (s)_{2j−1}
    let mut wp = ws / w; // w^{−s−2j+1}
    for j in 1..=3usize {
        tail += bernoulli_f64(2 * j) / factorial(2 * j as u64) * poch * wp;
        poch *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        wp /= w * w;
    }
    Ok(head + tail)
}
