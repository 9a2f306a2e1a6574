//! Polylogarithms Li₂, Li₃, Li₄ on the cut plane ℂ∖[1, ∞), the Hurwitz
//! zeta function and a direct-series Lerch transcendent.
//!
//! Li_s is evaluated by region:
//! * |z| ≤ 1/2: the defining series;
//! * |z| > 2: the inversion formula in terms of Li_s(1/z) and ln(−z);
//! * 1/2 < |z| ≤ 2, Re z ≤ 1/2: a power series in u = −ln(1 − z) whose
//!   coefficients are exact rationals built from Bernoulli numbers;
//! * 1/2 < |z| ≤ 2, Re z > 1/2: the expansion in μ = ln z around z = 1.
//!
//! Each region needs fewer than 60 terms for full double precision.

mod hurwitz;

pub(crate) use hurwitz::hermite_integral;
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_em};

use std::convert::TryFrom;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{fmt_c, Error, Result};
use crate::numerics::constants::{PI, ZETA3};
use crate::numerics::rational::{bernoulli, bernoulli_f64};
use crate::quadrature::{tanh_sinh, QuadOptions};

/// Order of a supported polylogarithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolylogOrder {
    Two,
    Three,
    Four,
}

impl PolylogOrder {
    pub fn as_int(self) -> usize {
        match self {
            PolylogOrder::Two => 2,
            PolylogOrder::Three => 3,
            PolylogOrder::Four => 4,
        }
    }
}

impl TryFrom<i64> for PolylogOrder {
    type Error = Error;

    fn try_from(s: i64) -> Result<Self> {
        match s {
            2 => Ok(PolylogOrder::Two),
            3 => Ok(PolylogOrder::Three),
            4 => Ok(PolylogOrder::Four),
            _ => Err(Error::UnsupportedOrder(s)),
        }
    }
}

const U_TERMS: usize = 80;

/// Coefficients of Li_s(1 − e^{−u}) = ∑_k c_k u^k for s = 2, 3, 4
/// (index 0, 1, 2). Li₂ has c_k = B_{k−1}/k!; higher orders follow from
/// d/du Li_s = Li_{s−1} · 1/(e^u − 1).
static U_COEFFS: Lazy<[Vec<f64>; 3]> = Lazy::new(|| {
    let n = U_TERMS;
    // b_j = B_j / j!
    let mut b = Vec::with_capacity(n + 2);
    let mut fact = BigInt::from(1);
    for j in 0..n + 2 {
        if j > 0 {
            fact *= j;
        }
        b.push(bernoulli(j).into_big() / BigRational::from_integer(fact.clone()));
    }
    // Li₁ = u
    let mut prev: Vec<BigRational> = vec![BigRational::zero(); n + 1];
    prev[1] = BigRational::from_integer(1.into());
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(3);
    for _ in 0..3 {
        let mut next = vec![BigRational::zero(); n + 1];
        for j in 0..n {
            // coefficient of u^j in Li_{s−1}·g, g = ∑ b_i u^{i−1}
            let mut d = BigRational::zero();
            for k in 1..=(j + 1).min(n) {
                if !prev[k].is_zero() {
                    d += &prev[k] * &b[j + 1 - k];
                }
            }
            next[j + 1] = d / BigRational::from_integer(BigInt::from(j + 1));
        }
        out.push(next.iter().map(|c| c.to_f64().unwrap_or(0.0)).collect());
        prev = next;
    }
    [out[0].clone(), out[1].clone(), out[2].clone()]
});

fn zeta_int(n: usize) -> f64 {
    match n {
        2 => PI * PI / 6.0,
        3 => ZETA3,
        4 => PI.powi(4) / 90.0,
        _ => unreachable!("orders are 2..=4"),
    }
}

/// Number of terms for a series with convergence ratio |x|/(2π).
fn terms_for(x: f64, max: usize) -> usize {
    let ratio = x / (2.0 * PI);
    if ratio <= 1e-300 {
        return 2;
    }
    let k = (-39.0 / ratio.ln()).ceil() as usize + 2;
    k.clamp(2, max)
}

/// Principal-branch Li_s(z) for s ∈ {2, 3, 4}.
///
/// Arguments on the cut (1, ∞) are rejected; z = 1 gives ζ(s).
pub fn li(s: i64, z: Complex64) -> Result<Complex64> {
    let order = PolylogOrder::try_from(s)?;
    li_order(order, z)
}

pub fn li_order(order: PolylogOrder, z: Complex64) -> Result<Complex64> {
    let s = order.as_int();
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("li", "argument is not finite"));
    }
    if z.im == 0.0 {
        if z.re == 1.0 {
            return Ok(Complex64::new(zeta_int(s), 0.0));
        }
        if z.re > 1.0 {
            return Err(Error::OnBranchCut {
                function: "li",
                arg: fmt_c(z),
                cut: "(1, ∞)",
            });
        }
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let r = z.norm();
    let v = if r <= 0.5 {
        direct(s, z)
    } else if r > 2.0 {
        inversion(s, z)
    } else if z.re > 0.5 {
        log_series(s, z.ln())
    } else {
        bernoulli_series(s, -(-z).ln_1p_c())
    };
    // keep real arguments real
    if z.im == 0.0 {
        Ok(Complex64::new(v.re, 0.0))
    } else {
        Ok(v)
    }
}

pub fn li2(z: Complex64) -> Result<Complex64> {
    li_order(PolylogOrder::Two, z)
}

pub fn li3(z: Complex64) -> Result<Complex64> {
    li_order(PolylogOrder::Three, z)
}

pub fn li4(z: Complex64) -> Result<Complex64> {
    li_order(PolylogOrder::Four, z)
}

/// Li_s(x) for real x ≤ 1.
pub fn li_real(s: i64, x: f64) -> Result<f64> {
    li(s, Complex64::new(x, 0.0)).map(|v| v.re)
}

trait Ln1p {
    fn ln_1p_c(self) -> Complex64;
}

impl Ln1p for Complex64 {
    /// ln(1 + w) with care for small |w|.
    fn ln_1p_c(self) -> Complex64 {
        let w = self;
        if w.norm() < 1e-4 {
            let w2 = w * w;
            w - w2 * 0.5 + w2 * w / 3.0 - w2 * w2 * 0.25
        } else {
            (w + 1.0).ln()
        }
    }
}

fn direct(s: usize, z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut p = z;
    for k in 1..200usize {
        let term = p / (k as f64).powi(s as i32);
        acc += term;
        if term.norm() <= 1e-18 * acc.norm() {
            break;
        }
        p *= z;
    }
    acc
}

fn inversion(s: usize, z: Complex64) -> Complex64 {
    let w = z.inv();
    let l = (-z).ln();
    let l2 = l * l;
    let pi2 = PI * PI;
    match s {
        2 => -direct(2, w) - pi2 / 6.0 - l2 * 0.5,
        3 => direct(3, w) - l * (pi2 / 6.0) - l2 * l / 6.0,
        _ => -direct(4, w) - 7.0 * pi2 * pi2 / 360.0 - l2 * (pi2 / 12.0) - l2 * l2 / 24.0,
    }
}

fn bernoulli_series(s: usize, u: Complex64) -> Complex64 {
    let c = &U_COEFFS[s - 2];
    let n = terms_for(u.norm(), U_TERMS);
    // Horner from the top
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (1..=n).rev() {
        acc = (acc + c[k]) * u;
    }
    acc
}

/// Li_s(e^μ) = μ^{s−1}/(s−1)! (H_{s−1} − ln(−μ)) + ∑_{k≠s−1} ζ(s−k) μ^k/k!,
/// with ζ(−n) = (−1)^n B_{n+1}/(n+1).
fn log_series(s: usize, mu: Complex64) -> Complex64 {
    let n = terms_for(mu.norm(), 150);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(1.0, 0.0); // μ^k/k!
    for k in 0..=n {
        if k > 0 {
            p = p * mu / k as f64;
        }
        if k + 1 == s {
            let h: f64 = (1..s).map(|j| 1.0 / j as f64).sum();
            acc += p * (Complex64::new(h, 0.0) - (-mu).ln());
            continue;
        }
        let zeta = if k + 1 < s {
            zeta_int(s - k)
        } else {
            let m = k - s; // ζ(−m)
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            sign * bernoulli_f64(m + 1) / (m + 1) as f64
        };
        if zeta != 0.0 {
            acc += p * zeta;
        }
    }
    acc
}

/// Li₂(z) = −∫₀¹ ln(1 − z x)/x dx by tanh–sinh quadrature on the straight
/// path from 0 to z. Real z > 1 puts the path on the cut and is rejected.
pub fn li2_integral(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re > 1.0 {
        return Err(Error::domain(
            "li2_integral",
            format!("path from 0 to {} crosses the branch cut (1, ∞)", fmt_c(z)),
        ));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let f = |x: f64| -> Complex64 { -(-(z * x)).ln_1p_c() / x };
    let r = tanh_sinh(&f, 0.0, 1.0, QuadOptions::abs(1e-15).with_rel(1e-15)).require_converged()?;
    Ok(r.value)
}

/// Φ(z, s, a) = ∑_{n≥0} zⁿ/(n + a)^s for |z| ≤ 1, real s > 1, a > 0.
///
/// |z| < 1 sums directly with the geometric tail bound; unimodular z ≠ ±1
/// sums directly with the summation-by-parts bound 2(N + a)^{−s}/|1 − z|.
/// z = 1 and z = −1 reduce to Hurwitz zeta values.
pub fn lerch_phi(z: Complex64, s: f64, a: f64) -> Result<Complex64> {
    if a <= 0.0 && a.fract() == 0.0 {
        return Err(Error::Pole {
            function: "lerch_phi",
            at: format!("a = {a}"),
        });
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(
            "lerch_phi",
            format!("requires a > 0, got {a}"),
        ));
    }
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain(
            "lerch_phi",
            format!("requires real s > 1, got {s}"),
        ));
    }
    let r = z.norm();
    if r > 1.0 + 1e-15 {
        return Err(Error::domain(
            "lerch_phi",
            format!("requires |z| ≤ 1, got {}", fmt_c(z)),
        ));
    }
    if z == Complex64::new(1.0, 0.0) {
        return Ok(Complex64::new(hurwitz_zeta_em(s, a)?, 0.0));
    }
    if z == Complex64::new(-1.0, 0.0) {
        let v =
            (hurwitz_zeta_em(s, 0.5 * a)? - hurwitz_zeta_em(s, 0.5 * (a + 1.0))?) * 2f64.powf(-s);
        return Ok(Complex64::new(v, 0.0));
    }
    let unimodular = r >= 1.0 - 1e-15;
    let gap = (Complex64::new(1.0, 0.0) - z).norm();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(1.0, 0.0);
    for n in 0..100_000_000u64 {
        let c = (n as f64 + a).powf(-s);
        acc += p * c;
        p *= z;
        let next = (n as f64 + 1.0 + a).powf(-s);
        let tail = if unimodular {
            2.0 * next / gap
        } else {
            p.norm() * next / (1.0 - r)
        };
        if tail <= 1e-16 * acc.norm().max(1e-300) {
            return Ok(acc);
        }
    }
    Err(Error::NonConvergence {
        terms: 100_000_000,
        tail: f64::NAN,
        tol: 1e-16,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(1.0)
    }

    // reference values from an independent 30-digit evaluation
    const REFS: &[(i64, f64, f64, f64, f64)] = &[
        (2, 0.7, 0.0, 0.889_377_624_286_038_66, 0.0),
        (2, -3.0, 0.0, -1.939_375_420_766_709, 0.0),
        (
            3,
            0.5,
            0.8,
            0.418_143_700_794_464_12,
            0.889_414_681_568_889_04,
        ),
        (
            4,
            -0.4,
            0.9,
            -0.430_557_399_862_503_5,
            0.854_110_876_920_356_62,
        ),
        (
            2,
            1.2,
            -0.3,
            1.541_121_979_857_292_5,
            -0.980_478_625_365_003_86,
        ),
        (
            3,
            -5.0,
            2.0,
            -3.612_427_210_770_510_2,
            1.089_839_537_671_441_7,
        ),
        (
            4,
            0.9,
            0.1,
            0.962_480_237_868_372_09,
            0.116_518_802_238_147_29,
        ),
        (2, 0.55, 0.0, 0.653_157_631_506_901_89, 0.0),
        (
            4,
            -0.7,
            -0.2,
            -0.674_648_092_819_757_89,
            -0.185_284_804_168_535_27,
        ),
        (3, 1.9, 0.4, 2.255_353_919_725_135, 1.138_804_717_979_551_9),
        (
            2,
            0.3,
            -1.5,
            -0.194_710_475_190_116_44,
            -1.403_876_079_365_825_4,
        ),
    ];

    #[test]
    fn matches_reference_values() {
        for &(s, re, im, vre, vim) in REFS {
            let v = li(s, c(re, im)).unwrap();
            assert!(close(v, c(vre, vim), 1e-14), "Li{s}({re}+{im}i) = {v}");
        }
    }

    #[test]
    fn special_values() {
        let pi2 = PI * PI;
        assert!((li(2, c(1.0, 0.0)).unwrap().re - pi2 / 6.0).abs() < 1e-15);
        assert!((li(2, c(-1.0, 0.0)).unwrap().re + pi2 / 12.0).abs() < 1e-15);
        assert_eq!(li(3, c(1.0, 0.0)).unwrap().re, ZETA3);
        let oracle: f64 = (1..=60).map(|k| 0.5f64.powi(k) / (k as f64).powi(4)).sum();
        assert!((li(4, c(0.5, 0.0)).unwrap().re - oracle).abs() < 1e-16);
    }

    #[test]
    fn order_four_inversion_at_two() {
        let l = 2f64.ln();
        let lhs = li(4, c(-2.0, 0.0)).unwrap() + li(4, c(-0.5, 0.0)).unwrap();
        let rhs = -7.0 * PI.powi(4) / 360.0 - PI * PI / 12.0 * l * l - l.powi(4) / 24.0;
        assert!((lhs.re - rhs).abs() < 1e-14);
    }

    #[test]
    fn branch_cut_and_order_errors() {
        assert!(matches!(li(2, c(1.5, 0.0)), Err(Error::OnBranchCut { .. })));
        assert!(matches!(
            li(5, c(0.1, 0.0)),
            Err(Error::UnsupportedOrder(5))
        ));
        assert!(li(2, c(1.5, 1e-12)).is_ok());
    }

    #[test]
    fn regions_agree_across_boundaries() {
        // points just inside and outside each switch agree to near rounding
        for s in 2..=4 {
            for &(a, b) in &[
                (c(0.499_999_999, 0.1), c(0.500_000_001, 0.1)),
                (c(-0.3, 0.399_999_999), c(-0.3, 0.400_000_001)),
                (c(1.0, 1.732_050_807), c(1.0, 1.732_050_809)),
            ] {
                let va = li(s, a).unwrap();
                let vb = li(s, b).unwrap();
                assert!((va - vb).norm() < 1e-8, "s = {s}: {va} vs {vb}");
            }
        }
    }

    #[test]
    fn integral_representation() {
        assert_eq!(li2_integral(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        for z in [c(0.7, 0.0), c(-3.0, 0.0), c(0.5, 0.8), c(1.0, 0.0)] {
            let d = li2_integral(z).unwrap() - li(2, z).unwrap();
            assert!(d.norm() < 1e-11, "{z}: {d}");
        }
        assert!(li2_integral(c(2.0, 0.0)).is_err());
    }

    #[test]
    fn lerch_values() {
        let pi2 = PI * PI;
        assert!((lerch_phi(c(1.0, 0.0), 2.0, 1.0).unwrap().re - pi2 / 6.0).abs() < 1e-13);
        assert!((lerch_phi(c(-1.0, 0.0), 2.0, 1.0).unwrap().re - pi2 / 12.0).abs() < 1e-13);
        let z = c(0.4, 0.0);
        let d = z * lerch_phi(z, 2.0, 1.0).unwrap() - li(2, z).unwrap();
        assert!(d.norm() < 1e-13);
        let z = c(0.0, 1.0);
        let d = z * lerch_phi(z, 3.0, 1.0).unwrap() - li(3, z).unwrap();
        assert!(d.norm() < 1e-12, "{d}");
        assert!(lerch_phi(z, 2.0, -1.0).is_err());
        assert!(lerch_phi(c(1.1, 0.0), 2.0, 1.0).is_err());
    }
}
