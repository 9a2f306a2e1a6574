//! Series whose terms are Bose-kernel integrals
//!
//! ∑_{k≥1} ∑_i c_i/(r^{a_i} q_k^{b_i}) ∫₀^∞ x^{n_i}/((r²x² + q_k²)^M (e^{2πx} − 1)) dx,
//! q_k = rk − s.

use num_complex::Complex64;
use rayon::prelude::*;

use super::{terms_needed, Kahan, SeriesResult, DEFAULT_MAX_TERMS};
use crate::error::{Error, Result};
use crate::numerics::rational::{binomial, factorial};
use crate::numerics::zeta::riemann_zeta;
use crate::quadrature::{bose, bose_times_x, exp_sinh, QuadOptions, QuadratureResult};

/// sin(πn/2) for integer n.
pub fn sin_half_pi_int(n: i64) -> i8 {
    [0, 1, 0, -1][n.rem_euclid(4) as usize]
}

/// One c/(r^a q^b) · ∫ x^n/(…)^M term of a [`BoseFamily`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoseTerm {
    pub coeff: f64,
    pub r_power: i32,
    pub q_power: i32,
    pub x_power: u32,
}

/// A Bose-kernel series with kernel power M and parameters r > 0, s, where
/// rk − s > 0 for every k ≥ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct BoseFamily {
    pub terms: Vec<BoseTerm>,
    pub kernel_power: u32,
    pub r: f64,
    pub s: f64,
}

impl BoseFamily {
    pub fn new(terms: Vec<BoseTerm>, kernel_power: u32, r: f64, s: f64) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() || !s.is_finite() {
            return Err(Error::domain(
                "bose_family",
                format!("requires real r > 0, got r = {r}"),
            ));
        }
        if !(r - s > 0.0) {
            return Err(Error::domain(
                "bose_family",
                format!("requires rk − s > 0 for all k ≥ 1, got r − s = {}", r - s),
            ));
        }
        if kernel_power == 0 {
            return Err(Error::domain(
                "bose_family",
                "kernel power must be positive",
            ));
        }
        if terms.iter().any(|t| t.x_power == 0) {
            return Err(Error::domain("bose_family", "x power must be positive"));
        }
        Ok(BoseFamily {
            terms: terms.into_iter().filter(|t| t.coeff != 0.0).collect(),
            kernel_power,
            r,
            s,
        })
    }

    /// The family ∑_{p=0}^{m−1} C(m,p) sin(π(m−p)/2)/(r^p q^{m−p}) ∫ x^{m−p}/(r²x²+q²)^m.
    pub fn hermite(m: u32, r: f64, s: f64) -> Result<Self> {
        if m < 1 {
            return Err(Error::domain("bose_family", "requires m ≥ 1"));
        }
        let terms = (0..m)
            .map(|p| BoseTerm {
                coeff: binomial(m as u64, p as u64) * sin_half_pi_int((m - p) as i64) as f64,
                r_power: p as i32,
                q_power: (m - p) as i32,
                x_power: m - p,
            })
            .collect();
        BoseFamily::new(terms, m, r, s)
    }

    fn q(&self, k: u64) -> f64 {
        self.r * k as f64 - self.s
    }

    /// The k-th integral combination (before summation over k).
    pub fn term(&self, k: u64, abs_tol: f64) -> QuadratureResult {
        let q = self.q(k);
        let r2 = self.r * self.r;
        let q2 = q * q;
        let m = self.kernel_power as i32;
        let weights: Vec<(f64, u32)> = self
            .terms
            .iter()
            .map(|t| {
                (
                    t.coeff * self.r.powi(-t.r_power) * q.powi(-t.q_power),
                    t.x_power,
                )
            })
            .collect();
        let f = move |x: f64| -> Complex64 {
            let d = (r2 * x * x + q2).powi(-m);
            let mut acc = 0.0;
            for &(w, n) in &weights {
                acc += w * x.powi(n as i32 - 1);
            }
            // x^{n}/(e^{2πx} − 1) = x^{n−1} · x/(e^{2πx} − 1)
            let kernel = if x < 1.0 {
                bose_times_x(x)
            } else {
                x * bose(x)
            };
            Complex64::new(acc * d * kernel, 0.0)
        };
        exp_sinh(&f, 0.0, QuadOptions::abs(abs_tol).with_rel(1e-14))
    }

    /// Bound on |∑_{k>K} term_k| from ∫ x^n/(r²x²+q²)^M bose ≤ q^{−2M} n! ζ(n+1)/(2π)^{n+1}
    /// and ∑_{k>K} (rk − s)^{−P} ≤ (rK − s)^{1−P}/(r(P − 1)).
    pub fn tail_bound(&self, k: u64) -> f64 {
        let two_pi = 2.0 * std::f64::consts::PI;
        let qk = self.q(k);
        self.terms
            .iter()
            .map(|t| {
                let n = t.x_power;
                let moment = factorial(n as u64)
                    * riemann_zeta(n as f64 + 1.0).unwrap_or(f64::INFINITY)
                    / two_pi.powi(n as i32 + 1);
                let p = (t.q_power + 2 * self.kernel_power as i32) as f64;
                t.coeff.abs() * self.r.powi(-t.r_power) * moment * qk.powf(1.0 - p)
                    / (self.r * (p - 1.0))
            })
            .sum()
    }

    /// Sums the family to within `tol`: the number of k is fixed up front
    /// from the tail bound, the integrals run in parallel, and the sum is
    /// reduced in ascending k.
    pub fn sum(&self, tol: f64) -> Result<SeriesResult> {
        if self.terms.is_empty() {
            return Ok(SeriesResult {
                value: Complex64::new(0.0, 0.0),
                tail_estimate: 0.0,
                terms_used: 1,
                inner_error: 0.0,
            });
        }
        let kmax = terms_needed(|k| self.tail_bound(k), 0.5 * tol, DEFAULT_MAX_TERMS)?;
        let results: Vec<QuadratureResult> = (1..=kmax)
            .into_par_iter()
            .map(|k| {
                // per-term budget sums to at most tol/20
                let budget = 0.05 * tol / (k as f64 * k as f64 * 1.7);
                self.term(k, budget)
            })
            .collect();
        let mut acc = Kahan::default();
        let mut inner = 0.0;
        for r in &results {
            let r = r.require_converged()?;
            acc.add(r.value);
            inner += r.error_estimate;
        }
        Ok(SeriesResult {
            value: acc.value(),
            tail_estimate: self.tail_bound(kmax),
            terms_used: kmax as usize,
            inner_error: inner,
        })
    }
}

/// Left side of the Hermite-family identity for integer m, real r > 0 and
/// real s with rk − s > 0.
pub fn hermite_family_lhs(m: u32, r: f64, s: f64, tol: f64) -> Result<SeriesResult> {
    BoseFamily::hermite(m, r, s)?.sum(tol)
}

/// ∫₀^∞ sin(m·arctan(x/z)) / ((x² + z²)^{m/2} (e^{2πx} − 1)) dx by direct
/// quadrature.
pub fn hermite_sine_integral(m: u32, z: f64, tol: f64) -> Result<QuadratureResult> {
    crate::polylog::hermite_integral(m as f64, Complex64::new(z, 0.0), tol).require_converged()
}

/// The same integral through its binomial expansion
/// ∑_{p<m} C(m,p) z^p sin(π(m−p)/2) ∫ x^{m−p}/((x² + z²)^m (e^{2πx} − 1)) dx.
pub fn sether_expansion(m: u32, z: f64, tol: f64) -> Result<QuadratureResult> {
    if m < 1 || !(z > 0.0) {
        return Err(Error::domain(
            "sether_expansion",
            "requires m ≥ 1 and z > 0",
        ));
    }
    let weights: Vec<(f64, i32)> = (0..m)
        .map(|p| {
            let c = binomial(m as u64, p as u64) * sin_half_pi_int((m - p) as i64) as f64;
            (c * z.powi(p as i32), (m - p) as i32)
        })
        .filter(|(c, _)| *c != 0.0)
        .collect();
    let z2 = z * z;
    let f = move |x: f64| -> Complex64 {
        let d = (x * x + z2).powi(-(m as i32));
        let kernel = if x < 1.0 {
            bose_times_x(x)
        } else {
            x * bose(x)
        };
        let mut acc = 0.0;
        for &(w, n) in &weights {
            acc += w * x.powi(n - 1);
        }
        Complex64::new(acc * d * kernel, 0.0)
    };
    exp_sinh(&f, 0.0, QuadOptions::abs(tol).with_rel(1e-15)).require_converged()
}
