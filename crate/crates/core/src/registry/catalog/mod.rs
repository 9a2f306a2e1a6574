//! The identity catalog.

mod bose;
mod double;
mod euler;
mod hurwitz;
mod integrals;
mod jonquiere;
mod lemma;

use num_complex::Complex64;

use super::domain::{params, ParameterDomain, Params, RealSet};
use super::estimate::Estimate;
use super::{IdentityRecord, LhsFn, RhsFn};
use crate::error::Result;
use crate::polylog::li_order;
use crate::polylog::PolylogOrder;
use crate::quadrature::{exp_sinh, tanh_sinh, QuadOptions};

pub(super) fn build() -> Vec<IdentityRecord> {
    let mut v = Vec::new();
    v.extend(lemma::records());
    v.extend(integrals::records());
    v.extend(euler::records());
    v.extend(jonquiere::records());
    v.extend(double::records());
    v.extend(hurwitz::records());
    v.extend(bose::records());
    v
}

fn record(
    id: &'static str,
    title: &'static str,
    anchor: &'static str,
    domain: ParameterDomain,
    lhs: LhsFn,
    rhs: RhsFn,
    default_samples: Vec<Params>,
) -> IdentityRecord {
    IdentityRecord {
        id,
        title,
        anchor,
        domain,
        lhs,
        rhs,
        default_samples,
        stress_samples: Vec::new(),
        default_tol: super::DEFAULT_TOL,
        note: None,
    }
}

impl IdentityRecord {
    fn stress(mut self, samples: Vec<Params>) -> Self {
        self.stress_samples = samples;
        self
    }

    fn note(mut self, f: fn(&Params) -> Option<&'static str>) -> Self {
        self.note = Some(f);
        self
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn ci(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// One-parameter samples.
fn one(name: &str, values: &[Complex64]) -> Vec<Params> {
    values.iter().map(|v| params(&[(name, *v)])).collect()
}

fn none() -> Vec<Params> {
    vec![Params::new()]
}

const STANDARD_REAL: [f64; 5] = [0.5, 1.0, 2.0, -0.25, -0.5];
const STANDARD_COMPLEX: [(f64, f64); 4] = [(0.5, 0.8), (0.5, -0.8), (-0.4, 0.9), (1.2, -0.3)];

/// The standard sample set for a complex parameter: three reals in (0, 2],
/// two in (−1, 0) and four off-axis points, keeping those the domain admits.
fn standard(name: &'static str, domain: &ParameterDomain, extra: &[Complex64]) -> Vec<Params> {
    let mut out: Vec<Params> = STANDARD_REAL
        .iter()
        .map(|&x| c(x))
        .chain(STANDARD_COMPLEX.iter().map(|&(a, b)| ci(a, b)))
        .chain(extra.iter().copied())
        .map(|z| params(&[(name, z)]))
        .collect();
    out.retain(|p| domain.check(p).is_ok());
    out
}

/// Principal logarithm with a signed-zero imaginary part treated as +0.
fn ln(z: Complex64) -> Complex64 {
    Complex64::new(z.re, z.im + 0.0).ln()
}

/// ln(1 + w), accurate for small |w|.
fn ln1p(w: Complex64) -> Complex64 {
    if w.norm() < 1e-4 {
        let w2 = w * w;
        w - w2 * 0.5 + w2 * w / 3.0 - w2 * w2 * 0.25
    } else {
        ln(w + 1.0)
    }
}

fn li(order: PolylogOrder, z: Complex64) -> Result<Complex64> {
    li_order(order, Complex64::new(z.re, z.im + 0.0))
}

fn li2(z: Complex64) -> Result<Complex64> {
    li(PolylogOrder::Two, z)
}

fn li3(z: Complex64) -> Result<Complex64> {
    li(PolylogOrder::Three, z)
}

fn li4(z: Complex64) -> Result<Complex64> {
    li(PolylogOrder::Four, z)
}

/// Li₂(t) for t ∈ [0, 1] inside integrands; NaN on failure so the rule
/// reports non-convergence.
fn li2_real(t: f64) -> f64 {
    crate::polylog::li_real(2, t).unwrap_or(f64::NAN)
}

fn quad_opts(tol: f64) -> QuadOptions {
    QuadOptions::abs(tol)
}

/// ∫₀¹ f(t) dt.
fn unit_integral<F: Fn(f64) -> Complex64>(f: F, tol: f64) -> Result<Estimate> {
    Estimate::quad(tanh_sinh(&f, 0.0, 1.0, quad_opts(tol)))
}

/// 1/z without the underflow of |z|² for tiny z.
fn recip(z: Complex64) -> Complex64 {
    let n = z.norm();
    z.conj() / n / n
}

/// ∫ f(t) dt along the segment from 0 to `end`.
fn segment_integral<F: Fn(Complex64) -> Complex64>(
    end: Complex64,
    f: F,
    tol: f64,
) -> Result<Estimate> {
    let g = |x: f64| {
        // integrands are at most logarithmic at 0; nodes this close add nothing
        if x * end.norm() < 1e-300 {
            return c(0.0);
        }
        f(end * x) * end
    };
    Estimate::quad(tanh_sinh(&g, 0.0, 1.0, quad_opts(tol)))
}

/// ∫₀^∞ f(t) dt.
fn half_line_integral<F: Fn(f64) -> Complex64>(f: F, tol: f64) -> Result<Estimate> {
    Estimate::quad(exp_sinh(&f, 0.0, quad_opts(tol)))
}

/// Bound on sup_N |∑_{k=K}^{N} z^k| for |z| ≤ 1, used with non-increasing
/// coefficients (Abel summation).
fn power_block_bound(z: Complex64, k: u64) -> f64 {
    let r = z.norm();
    let mut b = f64::INFINITY;
    if r < 1.0 {
        b = r.powf(k as f64) / (1.0 - r);
    }
    let d = (c(1.0) - z).norm();
    if r <= 1.0 && d > 0.0 {
        b = b.min(2.0 * r.powf(k as f64) / d);
    }
    b
}

/// Tail bound for ∑ c_k z^k when c_k ≥ 0 is non-increasing and
/// c_k ≤ coeff(k).
fn abel_tail<B: Fn(u64) -> f64>(z: Complex64, coeff: B) -> impl Fn(u64) -> f64 {
    move |k| {
        let b = power_block_bound(z, k + 1);
        if b == 0.0 {
            0.0
        } else {
            coeff(k + 1) * b
        }
    }
}

/// H_k ≤ 1 + ln k.
fn harmonic_bound(k: u64) -> f64 {
    1.0 + (k as f64).ln()
}

fn excl_below(hi: f64, closed: bool) -> RealSet {
    RealSet::below(hi, closed)
}

fn excl_above(lo: f64, closed: bool) -> RealSet {
    RealSet::above(lo, closed)
}
