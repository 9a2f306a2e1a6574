//! Double-exponential quadrature.
//!
//! Finite intervals use the tanh–sinh map, semi-infinite ones the exp–sinh
//! map. Both refine on the fixed schedule h = 2^{−level}, reuse all nodes of
//! the previous level, and never evaluate the integrand at an endpoint.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

const MIN_LEVEL: u32 = 3;
const MAX_LEVEL: u32 = 12;
const TANH_SINH_T_MAX: f64 = 6.5;
const EXP_SINH_T_MIN: f64 = -6.8;
const EXP_SINH_T_MAX: f64 = 2.6;

/// Value, error estimate and bookkeeping for one integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadratureResult {
    /// Turns a non-converged result into [`Error::QuadratureFailure`].
    pub fn require_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::QuadratureFailure {
                estimate: self.value.norm(),
                error: self.error_estimate,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Interval {
    Finite { lo: f64, hi: f64 },
    SemiInfinite { lo: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Lo,
    Hi,
}

/// An integrand of one real variable together with its interval.
///
/// `singular_at` records which endpoints carry an integrable singularity.
/// The double-exponential rules treat both endpoints alike, so it is only
/// descriptive, but it is checked against the interval.
pub struct IntegrandSpec<'a> {
    pub f: &'a (dyn Fn(f64) -> Complex64 + Sync + 'a),
    pub interval: Interval,
    pub singular_at: Vec<Endpoint>,
}

impl<'a> IntegrandSpec<'a> {
    pub fn finite(f: &'a (dyn Fn(f64) -> Complex64 + Sync + 'a), lo: f64, hi: f64) -> Self {
        IntegrandSpec {
            f,
            interval: Interval::Finite { lo, hi },
            singular_at: Vec::new(),
        }
    }

    pub fn semi_infinite(f: &'a (dyn Fn(f64) -> Complex64 + Sync + 'a), lo: f64) -> Self {
        IntegrandSpec {
            f,
            interval: Interval::SemiInfinite { lo },
            singular_at: Vec::new(),
        }
    }

    pub fn singular_at(mut self, ends: &[Endpoint]) -> Self {
        self.singular_at = ends.to_vec();
        self
    }
}

/// Stopping rule: converged once successive levels differ by less than
/// max(abs, rel·|I|).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_level: u32,
}

impl QuadOptions {
    pub fn abs(tol: f64) -> Self {
        QuadOptions {
            abs_tol: tol,
            rel_tol: 0.0,
            max_level: MAX_LEVEL,
        }
    }

    pub fn with_rel(mut self, rel: f64) -> Self {
        self.rel_tol = rel;
        self
    }
}

/// Integrates over a finite interval with the tanh–sinh rule.
pub fn integrate_finite(spec: &IntegrandSpec<'_>, tol: f64) -> Result<QuadratureResult> {
    match spec.interval {
        Interval::Finite { lo, hi } => {
            check_finite_interval(lo, hi)?;
            check_singular_ends(spec)?;
            Ok(tanh_sinh(spec.f, lo, hi, QuadOptions::abs(tol)))
        }
        Interval::SemiInfinite { .. } => Err(Error::domain(
            "integrate_finite",
            "interval is semi-infinite; use integrate_semi_infinite",
        )),
    }
}

/// Integrates over [lo, ∞) with the exp–sinh rule. The integrand should
/// decay at least exponentially, as the Bose kernel 1/(e^{2πx} − 1) does.
pub fn integrate_semi_infinite(spec: &IntegrandSpec<'_>, tol: f64) -> Result<QuadratureResult> {
    match spec.interval {
        Interval::SemiInfinite { lo } => {
            if !lo.is_finite() {
                return Err(Error::domain(
                    "integrate_semi_infinite",
                    "lower limit is not finite",
                ));
            }
            if spec.singular_at.contains(&Endpoint::Hi) {
                return Err(Error::domain(
                    "integrate_semi_infinite",
                    "a semi-infinite interval has no upper endpoint",
                ));
            }
            Ok(exp_sinh(spec.f, lo, QuadOptions::abs(tol)))
        }
        Interval::Finite { .. } => Err(Error::domain(
            "integrate_semi_infinite",
            "interval is finite; use integrate_finite",
        )),
    }
}

fn check_finite_interval(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite()) || !(lo < hi) {
        return Err(Error::domain(
            "integrate_finite",
            format!("need finite lo < hi, got [{lo}, {hi}]"),
        ));
    }
    Ok(())
}

fn check_singular_ends(spec: &IntegrandSpec<'_>) -> Result<()> {
    let mut seen = Vec::new();
    for e in &spec.singular_at {
        if seen.contains(e) {
            return Err(Error::domain(
                "integrate_finite",
                "endpoint listed twice in singular_at",
            ));
        }
        seen.push(*e);
    }
    Ok(())
}

/// Neumaier accumulator for complex sums.
#[derive(Default, Clone, Copy)]
struct Acc {
    sum: Complex64,
    comp: Complex64,
    abs: f64,
}

impl Acc {
    fn add(&mut self, v: Complex64) {
        self.abs += v.norm();
        self.sum.re = two_sum(self.sum.re, v.re, &mut self.comp.re);
        self.sum.im = two_sum(self.sum.im, v.im, &mut self.comp.im);
    }

    fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn two_sum(s: f64, v: f64, comp: &mut f64) -> f64 {
    let t = s + v;
    if s.abs() >= v.abs() {
        *comp += (s - t) + v;
    } else {
        *comp += (v - t) + s;
    }
    t
}

/// Core refinement loop shared by both maps. `node(t)` returns the
/// weighted integrand contributions at t (possibly several, possibly none).
fn refine<N>(t_lo: f64, t_hi: f64, opts: QuadOptions, mut node: N) -> QuadratureResult
where
    N: FnMut(f64, &mut Acc) -> usize,
{
    let mut acc = Acc::default();
    let mut evaluations = 0usize;

    // level 0: integer nodes
    let mut k = t_lo.ceil() as i64;
    while (k as f64) <= t_hi {
        evaluations += node(k as f64, &mut acc);
        k += 1;
    }
    let mut h = 1.0;
    let mut prev = acc.value() * h;
    let mut best = prev;
    let mut err = f64::INFINITY;

    for level in 1..=opts.max_level {
        h *= 0.5;
        let mut i = (t_lo / h).ceil() as i64;
        if i % 2 == 0 {
            i += 1;
        }
        while (i as f64) * h <= t_hi {
            evaluations += node(i as f64 * h, &mut acc);
            i += 2;
        }
        let current = acc.value() * h;
        let diff = (current - prev).norm();
        let roundoff = 8.0 * f64::EPSILON * acc.abs * h;
        err = diff.max(roundoff);
        best = current;
        prev = current;
        if !current.re.is_finite() || !current.im.is_finite() {
            break;
        }
        let target = opts.abs_tol.max(opts.rel_tol * current.norm());
        if level >= MIN_LEVEL && (diff <= target || diff <= roundoff) {
            return QuadratureResult {
                value: current,
                error_estimate: err,
                evaluations: evaluations.max(1),
                converged: true,
            };
        }
    }
    QuadratureResult {
        value: best,
        error_estimate: if err.is_finite() { err } else { f64::INFINITY },
        evaluations: evaluations.max(1),
        converged: false,
    }
}

/// tanh–sinh rule on [lo, hi].
pub fn tanh_sinh<F>(f: &F, lo: f64, hi: f64, opts: QuadOptions) -> QuadratureResult
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    let c = 0.5 * (lo + hi);
    let d = 0.5 * (hi - lo);
    refine(-TANH_SINH_T_MAX, TANH_SINH_T_MAX, opts, |t, acc| {
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        let w = d * FRAC_PI_2 * t.cosh() / (cu * cu);
        if w == 0.0 || !w.is_finite() {
            return 0;
        }
        if t == 0.0 {
            acc.add(f(c) * w);
            return 1;
        }
        // distance from the nearer endpoint, computed without cancellation
        let delta = d * (-u.abs()).exp() / cu;
        let x = if t > 0.0 { hi - delta } else { lo + delta };
        if delta == 0.0 || x <= lo || x >= hi {
            return 0;
        }
        acc.add(f(x) * w);
        1
    })
}

/// exp–sinh rule on [lo, ∞).
pub fn exp_sinh<F>(f: &F, lo: f64, opts: QuadOptions) -> QuadratureResult
where
    F: Fn(f64) -> Complex64 + ?Sized,
{
    refine(EXP_SINH_T_MIN, EXP_SINH_T_MAX, opts, |t, acc| {
        let u = FRAC_PI_2 * t.sinh();
        let eu = u.exp();
        let w = FRAC_PI_2 * t.cosh() * eu;
        let x = lo + eu;
        if eu == 0.0 || x <= lo || !w.is_finite() {
            return 0;
        }
        let v = f(x);
        if v.re == 0.0 && v.im == 0.0 {
            return 1;
        }
        acc.add(v * w);
        1
    })
}

/// x/(e^{2πx} − 1), the Bose kernel times x, accurate down to x → 0.
pub fn bose_times_x(x: f64) -> f64 {
    let v = 2.0 * std::f64::consts::PI * x;
    if v < 1e-3 {
        // v/(e^v − 1) = 1 − v/2 + v²/12 − v⁴/720
        let v2 = v * v;
        (1.0 - 0.5 * v + v2 / 12.0 - v2 * v2 / 720.0) / (2.0 * std::f64::consts::PI)
    } else {
        x / v.exp_m1()
    }
}

/// 1/(e^{2πx} − 1).
pub fn bose(x: f64) -> f64 {
    1.0 / (2.0 * std::f64::consts::PI * x).exp_m1()
}
