//! Riemann zeta and Dirichlet eta for real arguments.

use once_cell::sync::Lazy;

use super::constants::PI;
use super::rational::{bernoulli_f64, factorial};
use crate::error::{Error, Result};

const BORWEIN_N: usize = 30;

/// Borwein's weights for alternating-series acceleration:
/// e_k = (d_n − d_k)/d_n, so that η(s) ≈ ∑ (−1)^k e_k/(k+1)^s.
static BORWEIN_WEIGHTS: Lazy<Vec<f64>> = Lazy::new(|| {
    let n = BORWEIN_N;
    let nf = n as f64;
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0 / nf; // i = 0 term of (n+i−1)! 4^i / ((n−i)! (2i)!) scaled by 1/n!·n
    let mut sum = 0.0;
    for i in 0..=n {
        if i > 0 {
            let fi = i as f64;
            term *= (nf + fi - 1.0) * 4.0 * (nf - fi + 1.0) / ((2.0 * fi - 1.0) * 2.0 * fi);
        }
        sum += term;
        d.push(nf * sum);
    }
    let dn = d[n];
    (0..n).map(|k| (dn - d[k]) / dn).collect()
});

/// Neumaier-compensated sum.
pub(crate) fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// η(s) = ∑_{n≥1} (−1)^{n−1}/n^s for real s > 0.
pub fn dirichlet_eta(s: f64) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(
            "dirichlet_eta",
            format!("requires s > 0, got {s}"),
        ));
    }
    if s == 1.0 {
        return Ok(std::f64::consts::LN_2);
    }
    if s.fract() == 0.0 && (s as u64) % 2 == 0 {
        let z = even_zeta(s as usize);
        return Ok(z * -(2f64.powf(1.0 - s) - 1.0));
    }
    Ok(borwein_eta(s))
}

fn borwein_eta(s: f64) -> f64 {
    let w = &*BORWEIN_WEIGHTS;
    compensated_sum(w.iter().enumerate().map(|(k, e)| {
        let t = e * ((k + 1) as f64).powf(-s);
        if k % 2 == 0 {
            t
        } else {
            -t
        }
    }))
}

/// ζ(2n) = (−1)^{n+1} B_{2n} (2π)^{2n} / (2 (2n)!).
fn even_zeta(two_n: usize) -> f64 {
    if two_n > 60 {
        // 1 to double precision
        return 1.0 + 2f64.powi(-(two_n as i32)) + 3f64.powi(-(two_n as i32));
    }
    let b = bernoulli_f64(two_n).abs();
    b * (2.0 * PI).powi(two_n as i32) / (2.0 * factorial(two_n as u64))
}

/// ζ(s) for real s > 1.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) || s.is_nan() {
        return Err(Error::domain(
            "riemann_zeta",
            format!("requires s > 1, got {s}"),
        ));
    }
    if s == f64::INFINITY {
        return Ok(1.0);
    }
    if s.fract() == 0.0 && s <= 1.0e6 && (s as u64) % 2 == 0 {
        return Ok(even_zeta(s as usize));
    }
    if s > 60.0 {
        return Ok(1.0 + 2f64.powf(-s) + 3f64.powf(-s));
    }
    // ζ(s) = η(s)/(1 − 2^{1−s})
    let factor = -(2f64.powf(1.0 - s) - 1.0);
    Ok(borwein_eta(s) / factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::constants::CONSTANTS;

    fn ulps(a: f64, b: f64) -> u64 {
        (a.to_bits() as i64 - b.to_bits() as i64).unsigned_abs()
    }

    #[test]
    fn even_values() {
        assert!(ulps(riemann_zeta(2.0).unwrap(), PI * PI / 6.0) <= 1);
        assert!(ulps(riemann_zeta(4.0).unwrap(), PI.powi(4) / 90.0) <= 1);
        assert!(ulps(dirichlet_eta(2.0).unwrap(), PI * PI / 12.0) <= 1);
    }

    #[test]
    fn odd_constants_within_two_ulp() {
        for n in [3u32, 5, 7, 9, 11, 13] {
            let z = riemann_zeta(n as f64).unwrap();
            let c = CONSTANTS.odd_zeta(n).unwrap();
            assert!(ulps(z, c) <= 2, "zeta({n}) = {z:e} vs {c:e}");
        }
    }

    #[test]
    fn eta_zeta_relation_within_two_ulp() {
        for n in 2..=20 {
            let s = n as f64;
            let eta = dirichlet_eta(s).unwrap();
            let rel = (1.0 - 2f64.powf(1.0 - s)) * riemann_zeta(s).unwrap();
            assert!(ulps(eta, rel) <= 2, "n = {n}: {eta:e} vs {rel:e}");
        }
    }

    #[test]
    fn non_integer_argument() {
        // ζ(2.5) = 1.341487257250917179756769…
        assert!((riemann_zeta(2.5).unwrap() - 1.341_487_257_250_917_2).abs() < 2e-15);
    }

    #[test]
    fn eta_at_one_is_ln2() {
        assert_eq!(dirichlet_eta(1.0).unwrap(), std::f64::consts::LN_2);
        // η(1/2) = 0.604898643421630370247265…
        assert!((dirichlet_eta(0.5).unwrap() - 0.604_898_643_421_630_4).abs() < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(riemann_zeta(1.0).is_err());
        assert!(riemann_zeta(0.5).is_err());
        assert!(dirichlet_eta(0.0).is_err());
        assert!(riemann_zeta(f64::NAN).is_err());
    }

    #[test]
    fn large_arguments_tend_to_one() {
        assert_eq!(riemann_zeta(200.0).unwrap(), 1.0);
        assert!((riemann_zeta(64.0).unwrap() - 1.0).abs() < 1e-18 + f64::EPSILON);
    }
}
