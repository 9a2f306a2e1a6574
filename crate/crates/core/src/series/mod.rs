//! Tail-bounded summation of single and double series.
//!
//! Every stopping decision is driven by a caller-supplied closed-form bound
//! on the remainder, so the reported tail estimate is a certificate rather
//! than an extrapolation.

mod bose;
mod hurwitz;

pub use bose::{
    hermite_family_lhs, hermite_sine_integral, sether_expansion, sin_half_pi_int, BoseFamily,
    BoseTerm,
};
pub use hurwitz::{hurwitz_series_lhs, HurwitzSeriesParams};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default cap on single-series terms.
pub const DEFAULT_MAX_TERMS: u64 = 10_000_000;
/// Default cap on diagonal shells for double series (2000² cells).
pub const DEFAULT_MAX_SHELLS: u64 = 2000;

/// Partial sum of an infinite series with a bound on what was left out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    /// Certified bound on the truncated remainder.
    pub tail_estimate: f64,
    pub terms_used: usize,
    /// Error already present in the summed terms (for example quadrature
    /// error when each term is an integral); zero for exact terms.
    pub inner_error: f64,
}

impl SeriesResult {
    /// Tail plus inner error.
    pub fn total_error(&self) -> f64 {
        self.tail_estimate + self.inner_error
    }
}

/// Compensated complex accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Kahan {
    sum: Complex64,
    comp: Complex64,
}

impl Kahan {
    pub(crate) fn add(&mut self, v: Complex64) {
        self.sum.re = neumaier(self.sum.re, v.re, &mut self.comp.re);
        self.sum.im = neumaier(self.sum.im, v.im, &mut self.comp.im);
    }

    pub(crate) fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn neumaier(s: f64, v: f64, comp: &mut f64) -> f64 {
    let t = s + v;
    if s.abs() >= v.abs() {
        *comp += (s - t) + v;
    } else {
        *comp += (v - t) + s;
    }
    t
}

/// ∑_{k≥1} term(k), stopping at the first K with tail_bound(K) < tol.
///
/// `term` is called once for each k in ascending order, so it may carry
/// running state such as a harmonic number. `tail_bound(K)` must bound
/// |∑_{k>K} term(k)|.
pub fn sum_series<T, B>(term: T, tail_bound: B, tol: f64) -> Result<SeriesResult>
where
    T: FnMut(u64) -> Complex64,
    B: Fn(u64) -> f64,
{
    sum_series_capped(term, tail_bound, tol, DEFAULT_MAX_TERMS)
}

/// [`sum_series`] with an explicit term cap.
pub fn sum_series_capped<T, B>(
    mut term: T,
    tail_bound: B,
    tol: f64,
    max_terms: u64,
) -> Result<SeriesResult>
where
    T: FnMut(u64) -> Complex64,
    B: Fn(u64) -> f64,
{
    let mut acc = Kahan::default();
    let mut tail = f64::INFINITY;
    for k in 1..=max_terms {
        let t = term(k);
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(Error::domain(
                "sum_series",
                format!("term {k} is not finite"),
            ));
        }
        acc.add(t);
        tail = tail_bound(k);
        if tail < tol {
            return Ok(SeriesResult {
                value: acc.value(),
                tail_estimate: tail,
                terms_used: k as usize,
                inner_error: 0.0,
            });
        }
    }
    Err(Error::NonConvergence {
        terms: max_terms as usize,
        tail,
        tol,
    })
}

/// Smallest K ≥ 1 with bound(K) < tol, found by doubling then bisection.
/// `bound` must be non-increasing.
pub(crate) fn terms_needed<B: Fn(u64) -> f64>(bound: B, tol: f64, max: u64) -> Result<u64> {
    if bound(1) < tol {
        return Ok(1);
    }
    let mut hi = 2u64;
    while bound(hi) >= tol {
        if hi >= max {
            return Err(Error::NonConvergence {
                terms: max as usize,
                tail: bound(max),
                tol,
            });
        }
        hi = (hi * 2).min(max);
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if bound(mid) < tol {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Bound for ∑_{k>K} c/k^p (p > 1), by the integral test.
pub fn power_tail(c: f64, p: f64) -> impl Fn(u64) -> f64 {
    move |k| c * (k as f64).powf(1.0 - p) / (p - 1.0)
}

/// Bound for ∑_{k>K} c(a + ln k)/k^p with p > 1 and p(a + ln K) ≥ 1, by the
/// integral test: c K^{1−p} ((a + ln K)/(p − 1) + 1/(p − 1)²). Harmonic
/// numbers satisfy H_k ≤ 1 + ln k.
pub fn log_power_tail(c: f64, a: f64, p: f64) -> impl Fn(u64) -> f64 {
    move |k| {
        let kf = k as f64;
        let l = a + kf.ln();
        if p * l < 1.0 {
            return f64::INFINITY;
        }
        c * kf.powf(1.0 - p) * (l / (p - 1.0) + 1.0 / ((p - 1.0) * (p - 1.0)))
    }
}

/// Bound for ∑_{k>K} c q^k with 0 ≤ q < 1.
pub fn geometric_tail(c: f64, q: f64) -> impl Fn(u64) -> f64 {
    move |k| c * q.powf(k as f64 + 1.0) / (1.0 - q)
}

/// Bound for an alternating series whose term magnitudes g(k) decrease to
/// zero: the remainder after K is at most g(K + 1).
pub fn alternating_tail<G: Fn(u64) -> f64>(g: G) -> impl Fn(u64) -> f64 {
    move |k| g(k + 1)
}

/// ∑_{j≥1} ∑_{k≥0} f(k + j, j), summed over shells n = k + j:
/// shell n holds f(n, 1), …, f(n, n).
///
/// `shell_tail(N)` must bound the magnitude of everything in shells > N.
/// Stops once the bound drops below `tol`; exceeding
/// [`DEFAULT_MAX_SHELLS`] is an error.
pub fn double_series_lhs<F, B>(f: F, shell_tail: B, tol: f64) -> Result<SeriesResult>
where
    F: Fn(u64, u64) -> Complex64,
    B: Fn(u64) -> f64,
{
    let mut acc = Kahan::default();
    let mut tail = f64::INFINITY;
    let mut cells = 0usize;
    for n in 1..=DEFAULT_MAX_SHELLS {
        add_shell(&f, n, &mut acc);
        cells += n as usize;
        tail = shell_tail(n);
        if tail < tol {
            return Ok(SeriesResult {
                value: acc.value(),
                tail_estimate: tail,
                terms_used: cells,
                inner_error: 0.0,
            });
        }
    }
    Err(Error::NonConvergence {
        terms: cells,
        tail,
        tol,
    })
}

/// The same shell summation truncated at a fixed number of shells; the
/// tail estimate is `shell_tail(shells)` whatever its size.
pub fn double_series_truncated<F, B>(f: F, shell_tail: B, shells: u64) -> SeriesResult
where
    F: Fn(u64, u64) -> Complex64,
    B: Fn(u64) -> f64,
{
    let mut acc = Kahan::default();
    for n in 1..=shells.max(1) {
        add_shell(&f, n, &mut acc);
    }
    let shells = shells.max(1);
    SeriesResult {
        value: acc.value(),
        tail_estimate: shell_tail(shells),
        terms_used: (shells * (shells + 1) / 2) as usize,
        inner_error: 0.0,
    }
}

fn add_shell<F: Fn(u64, u64) -> Complex64>(f: &F, n: u64, acc: &mut Kahan) {
    // pairwise (j, j+1) grouping keeps alternating shells well conditioned
    let mut j = 1;
    while j <= n {
        let mut v = f(n, j);
        if j < n {
            v += f(n, j + 1);
        }
        acc.add(v);
        j += 2;
    }
}

/// ½(∑_{j,k ≤ n} f(k, j) + ∑_{k ≤ n} f(k, k)), the symmetric right side on
/// an n × n box. For symmetric f it equals the first n shells exactly.
pub fn symmetric_box_rhs<F: Fn(u64, u64) -> Complex64>(f: F, n: u64) -> Complex64 {
    let mut full = Kahan::default();
    let mut diag = Kahan::default();
    for a in 1..=n {
        for b in 1..=n {
            full.add(f(a, b));
        }
        diag.add(f(a, a));
    }
    (full.value() + diag.value()) * 0.5
}

/// ½((∑ f(k))² + ∑ f(k)²) from the two single series.
///
/// `single` and `diag` are (term, tail bound) pairs for f(k) and f(k)².
/// The returned tail estimate propagates both truncations:
/// |S₁|e₁ + e₁²/2 + e₂/2.
pub fn transform_rhs<T1, B1, T2, B2>(
    single: (T1, B1),
    diag: (T2, B2),
    tol: f64,
) -> Result<SeriesResult>
where
    T1: FnMut(u64) -> Complex64,
    B1: Fn(u64) -> f64,
    T2: FnMut(u64) -> Complex64,
    B2: Fn(u64) -> f64,
{
    let s1 = sum_series(single.0, single.1, 0.25 * tol)?;
    let s2 = sum_series(diag.0, diag.1, 0.5 * tol)?;
    let e1 = s1.tail_estimate;
    let value = (s1.value * s1.value + s2.value) * 0.5;
    Ok(SeriesResult {
        value,
        tail_estimate: s1.value.norm() * e1 + 0.5 * e1 * e1 + 0.5 * s2.tail_estimate,
        terms_used: s1.terms_used + s2.terms_used,
        inner_error: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::constants::{LN_2, PI};

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn basel_with_raised_cap() {
        // 1/K < 1e−8 needs 10⁸ terms, above the default cap
        assert!(matches!(
            sum_series(|k| c(1.0 / (k * k) as f64), |k| 1.0 / k as f64, 1e-8),
            Err(Error::NonConvergence { .. })
        ));
        let r = sum_series_capped(
            |k| c(1.0 / (k as f64 * k as f64)),
            |k| 1.0 / k as f64,
            1e-6,
            2_000_000,
        )
        .unwrap();
        assert!((r.value.re - PI * PI / 6.0).abs() <= r.tail_estimate);
        assert_eq!(r.terms_used, 1_000_001);
    }

    #[test]
    fn harmonic_cubic_sum() {
        let mut h = 0.0;
        let r = sum_series(
            |k| {
                h += 1.0 / k as f64;
                c(h / (k as f64).powi(3))
            },
            log_power_tail(1.0, 1.0, 3.0),
            1e-10,
        )
        .unwrap();
        assert!((r.value.re - PI.powi(4) / 72.0).abs() < 1e-10);
    }

    #[test]
    fn tail_helpers_bound_true_tails() {
        let k = 50u64;
        let true_tail: f64 = (51..200_000).map(|j| 1.0 / (j as f64).powi(3)).sum();
        assert!(power_tail(1.0, 3.0)(k) >= true_tail);
        let g: f64 = (51..400).map(|j| 0.7f64.powi(j)).sum();
        assert!(geometric_tail(1.0, 0.7)(k) >= g);
        assert!(alternating_tail(|j| 1.0 / j as f64)(k) == 1.0 / 51.0);
    }

    #[test]
    fn double_series_examples() {
        let q: f64 = 1.0 / 3.0;
        let r = double_series_lhs(
            |a, b| c(q.powi((a + b) as i32)),
            |n| q.powf(n as f64 + 1.0) / (1.0 - q) * q / (1.0 - q),
            1e-14,
        )
        .unwrap();
        let expect = 0.5 * ((q / (1.0 - q)).powi(2) + q * q / (1.0 - q * q));
        assert!((r.value.re - expect).abs() < 1e-14);

        let one = double_series_lhs(
            |a, b| c(if a == 1 && b == 1 { 1.0 } else { 0.0 }),
            |_| 0.0,
            1e-12,
        )
        .unwrap();
        assert_eq!(one.value.re, 1.0);
    }

    #[test]
    fn box_identity_is_exact_for_symmetric_f() {
        let f = |a: u64, b: u64| c(1.0 / ((a + b) as f64).powi(4) + 1.0 / ((a * a * b * b) as f64));
        let lhs = double_series_truncated(f, |_| 0.0, 300);
        let rhs = symmetric_box_rhs(f, 300);
        assert!((lhs.value - rhs).norm() < 1e-14);
    }

    #[test]
    fn transform_examples() {
        let r = transform_rhs(
            (|k: u64| c(1.0 / (k * k) as f64), power_tail(1.0, 2.0)),
            (|k: u64| c(1.0 / (k as f64).powi(4)), power_tail(1.0, 4.0)),
            1e-5,
        )
        .unwrap();
        assert!((r.value.re - 7.0 * PI.powi(4) / 360.0).abs() <= r.tail_estimate.max(1e-5));

        let r = transform_rhs(
            (
                |k: u64| c(if k % 2 == 0 { 1.0 } else { -1.0 } / k as f64),
                alternating_tail(|k| 1.0 / k as f64),
            ),
            (|k: u64| c(1.0 / (k * k) as f64), power_tail(1.0, 2.0)),
            1e-5,
        )
        .unwrap();
        assert!((r.value.re - 0.5 * (LN_2 * LN_2 + PI * PI / 6.0)).abs() <= 1e-5);

        let z = transform_rhs((|_| c(0.0), |_| 0.0), (|_| c(0.0), |_| 0.0), 1e-9).unwrap();
        assert_eq!(z.value, c(0.0));
    }
}
