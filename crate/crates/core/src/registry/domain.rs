use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{fmt_c, Error, Result};

/// Named parameter values, ordered by name.
pub type Params = BTreeMap<String, Complex64>;

/// Minimum distance between a generated sample and anything excluded.
pub const INTERIOR_MARGIN: f64 = 1e-3;

/// Builds a parameter map from (name, value) pairs.
pub fn params(pairs: &[(&str, Complex64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// A piece of the real axis: an interval, a ray or a single point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealSet {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl RealSet {
    pub const fn open(lo: f64, hi: f64) -> Self {
        RealSet {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub const fn closed(lo: f64, hi: f64) -> Self {
        RealSet {
            lo,
            hi,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub const fn point(x: f64) -> Self {
        RealSet::closed(x, x)
    }

    /// (−∞, hi) or (−∞, hi].
    pub const fn below(hi: f64, closed: bool) -> Self {
        RealSet {
            lo: f64::NEG_INFINITY,
            hi,
            lo_closed: false,
            hi_closed: closed,
        }
    }

    /// (lo, ∞) or [lo, ∞).
    pub const fn above(lo: f64, closed: bool) -> Self {
        RealSet {
            lo,
            hi: f64::INFINITY,
            lo_closed: closed,
            hi_closed: false,
        }
    }

    pub fn contains_real(&self, x: f64) -> bool {
        let lo_ok = if self.lo_closed {
            x >= self.lo
        } else {
            x > self.lo
        };
        let hi_ok = if self.hi_closed {
            x <= self.hi
        } else {
            x < self.hi
        };
        lo_ok && hi_ok
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.im == 0.0 && self.contains_real(z.re)
    }

    /// Euclidean distance from z to the closure of the set.
    pub fn distance(&self, z: Complex64) -> f64 {
        let x = z.re.clamp(self.lo, self.hi);
        Complex64::new(z.re - x, z.im).norm()
    }

    fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

impl std::fmt::Display for RealSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", fmt_real(self.lo));
        }
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(
            f,
            "{open}{}, {}{close}",
            fmt_real(self.lo),
            fmt_real(self.hi)
        )
    }
}

/// Real number with a typographic minus and ∞.
pub fn fmt_real(x: f64) -> String {
    if x == f64::INFINITY {
        "∞".into()
    } else if x == f64::NEG_INFINITY {
        "−∞".into()
    } else {
        format!("{x}").replace('-', "−")
    }
}

fn fmt_union(sets: &[RealSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
    parts.join(" ∪ ")
}

/// The set of admissible parameter values for an identity.
#[derive(Debug, Clone, PartialEq)]
pub enum ParameterDomain {
    /// No parameters.
    None,
    /// The complex plane with pieces of the real axis removed, optionally
    /// intersected with the disk |z| ≤ radius (or < radius).
    ComplexMinusRays {
        name: &'static str,
        excluded: Vec<RealSet>,
        disk: Option<(f64, bool)>,
    },
    /// A real parameter in an interval.
    RealInterval { name: &'static str, set: RealSet },
    /// An integer parameter in lo..=hi.
    IntegerRange {
        name: &'static str,
        lo: i64,
        hi: i64,
    },
    /// Independent conditions on several parameters.
    Composite(Vec<ParameterDomain>),
}

impl ParameterDomain {
    pub fn complex(name: &'static str, excluded: &[RealSet]) -> Self {
        ParameterDomain::ComplexMinusRays {
            name,
            excluded: excluded.to_vec(),
            disk: None,
        }
    }

    pub fn complex_disk(
        name: &'static str,
        excluded: &[RealSet],
        radius: f64,
        closed: bool,
    ) -> Self {
        ParameterDomain::ComplexMinusRays {
            name,
            excluded: excluded.to_vec(),
            disk: Some((radius, closed)),
        }
    }

    pub fn real(name: &'static str, set: RealSet) -> Self {
        ParameterDomain::RealInterval { name, set }
    }

    pub fn integers(name: &'static str, lo: i64, hi: i64) -> Self {
        ParameterDomain::IntegerRange { name, lo, hi }
    }

    /// Parameter names, in declaration order.
    pub fn names(&self) -> Vec<&'static str> {
        match self {
            ParameterDomain::None => vec![],
            ParameterDomain::ComplexMinusRays { name, .. }
            | ParameterDomain::RealInterval { name, .. }
            | ParameterDomain::IntegerRange { name, .. } => vec![name],
            ParameterDomain::Composite(parts) => parts.iter().flat_map(|p| p.names()).collect(),
        }
    }

    pub fn description(&self) -> String {
        match self {
            ParameterDomain::None => "no parameters".into(),
            ParameterDomain::ComplexMinusRays {
                name,
                excluded,
                disk,
            } => {
                let mut s = String::new();
                if excluded.is_empty() {
                    let _ = write!(s, "{name} ∈ ℂ");
                } else if excluded.len() == 1 {
                    let _ = write!(s, "{name} ∈ ℂ∖{}", excluded[0]);
                } else {
                    let _ = write!(s, "{name} ∈ ℂ∖({})", fmt_union(excluded));
                }
                if let Some((r, closed)) = disk {
                    let _ = write!(
                        s,
                        ", |{name}| {} {}",
                        if *closed { "≤" } else { "<" },
                        fmt_real(*r)
                    );
                }
                s
            }
            ParameterDomain::RealInterval { name, set } => format!("{name} ∈ {set}"),
            ParameterDomain::IntegerRange { name, lo, hi } => {
                if *hi == i64::MAX {
                    format!("{name} ∈ ℤ, {name} ≥ {lo}")
                } else {
                    format!("{name} ∈ {{{lo}, …, {hi}}}")
                }
            }
            ParameterDomain::Composite(parts) => parts
                .iter()
                .map(|p| p.description())
                .collect::<Vec<_>>()
                .join("; "),
        }
    }

    /// Checks membership; the error names the excluded region.
    pub fn check(&self, p: &Params) -> Result<()> {
        match self {
            ParameterDomain::None => Ok(()),
            ParameterDomain::ComplexMinusRays {
                name,
                excluded,
                disk,
            } => {
                let z = get(p, name)?;
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(excluded_err(name, z, "non-finite values".into()));
                }
                for set in excluded {
                    if set.contains(z) {
                        return Err(excluded_err(name, z, set.to_string()));
                    }
                }
                if let Some((r, closed)) = disk {
                    let outside = if *closed {
                        z.norm() > *r
                    } else {
                        z.norm() >= *r
                    };
                    if outside {
                        let region = format!(
                            "|{name}| {} {}",
                            if *closed { ">" } else { "≥" },
                            fmt_real(*r)
                        );
                        return Err(excluded_err(name, z, region));
                    }
                }
                Ok(())
            }
            ParameterDomain::RealInterval { name, set } => {
                let z = get(p, name)?;
                if z.im != 0.0 {
                    return Err(excluded_err(name, z, "non-real values".into()));
                }
                if !set.contains_real(z.re) {
                    return Err(excluded_err(name, z, format!("values outside {set}")));
                }
                Ok(())
            }
            ParameterDomain::IntegerRange { name, lo, hi } => {
                let z = get(p, name)?;
                if z.im != 0.0 || z.re.fract() != 0.0 {
                    return Err(excluded_err(name, z, "non-integer values".into()));
                }
                let n = z.re;
                if n < *lo as f64 || n > *hi as f64 {
                    return Err(excluded_err(
                        name,
                        z,
                        format!("values outside {}", self.description()),
                    ));
                }
                Ok(())
            }
            ParameterDomain::Composite(parts) => parts.iter().try_for_each(|d| d.check(p)),
        }
    }

    /// Distance from the point to the nearest excluded set or open
    /// endpoint; infinite when nothing is excluded nearby.
    pub fn margin(&self, p: &Params) -> f64 {
        match self {
            ParameterDomain::None | ParameterDomain::IntegerRange { .. } => f64::INFINITY,
            ParameterDomain::ComplexMinusRays {
                name,
                excluded,
                disk,
            } => {
                let Some(z) = p.get(*name) else { return 0.0 };
                let mut d = excluded
                    .iter()
                    .map(|s| s.distance(*z))
                    .fold(f64::INFINITY, f64::min);
                if let Some((r, false)) = disk {
                    d = d.min(r - z.norm());
                }
                d
            }
            ParameterDomain::RealInterval { name, set } => {
                let Some(z) = p.get(*name) else { return 0.0 };
                let mut d = f64::INFINITY;
                if !set.lo_closed {
                    d = d.min(z.re - set.lo);
                }
                if !set.hi_closed {
                    d = d.min(set.hi - z.re);
                }
                d
            }
            ParameterDomain::Composite(parts) => parts
                .iter()
                .map(|d| d.margin(p))
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// A random interior point, for single-parameter domains.
    pub fn random_sample(&self, rng: &mut ChaCha8Rng) -> Option<Params> {
        match self {
            ParameterDomain::ComplexMinusRays { name, disk, .. } => {
                let bound = disk.map(|(r, _)| 0.95 * r).unwrap_or(2.0);
                loop {
                    let z =
                        Complex64::new(rng.gen_range(-bound..bound), rng.gen_range(-bound..bound));
                    if disk.is_some() && z.norm() > bound {
                        continue;
                    }
                    let p = params(&[(name, z)]);
                    if self.check(&p).is_ok() && self.margin(&p) >= INTERIOR_MARGIN {
                        return Some(p);
                    }
                }
            }
            ParameterDomain::RealInterval { name, set } => {
                let lo = set.lo.max(-10.0) + INTERIOR_MARGIN;
                let hi = set.hi.min(10.0) - INTERIOR_MARGIN;
                if !(lo < hi) {
                    return None;
                }
                let x = rng.gen_range(lo..hi);
                Some(params(&[(name, Complex64::new(x, 0.0))]))
            }
            ParameterDomain::IntegerRange { name, lo, hi } => {
                let hi = (*hi).min(lo.saturating_add(5));
                let n = rng.gen_range(*lo..=hi);
                Some(params(&[(name, Complex64::new(n as f64, 0.0))]))
            }
            ParameterDomain::None | ParameterDomain::Composite(_) => None,
        }
    }
}

fn get(p: &Params, name: &str) -> Result<Complex64> {
    p.get(name)
        .copied()
        .ok_or_else(|| Error::MissingParameter(name.to_string()))
}

fn excluded_err(name: &str, z: Complex64, region: String) -> Error {
    Error::ExcludedRegion {
        name: name.to_string(),
        value: fmt_c(z),
        region,
    }
}

/// Reads a parameter that the domain check has already validated.
pub fn param(p: &Params, name: &str) -> Result<Complex64> {
    get(p, name)
}

/// Reads a real parameter.
pub fn real_param(p: &Params, name: &str) -> Result<f64> {
    let z = get(p, name)?;
    if z.im != 0.0 {
        return Err(excluded_err(name, z, "non-real values".into()));
    }
    Ok(z.re)
}

/// Reads a non-negative integer parameter.
pub fn int_param(p: &Params, name: &str) -> Result<u32> {
    let x = real_param(p, name)?;
    if x.fract() != 0.0 || x < 0.0 || x > u32::MAX as f64 {
        return Err(excluded_err(
            name,
            Complex64::new(x, 0.0),
            "non-integer values".into(),
        ));
    }
    Ok(x as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn ray_membership_and_messages() {
        let d = ParameterDomain::complex("a", &[RealSet::below(-1.0, false)]);
        assert_eq!(d.description(), "a ∈ ℂ∖(−∞, −1)");
        assert!(d.check(&params(&[("a", c(-1.0, 0.0))])).is_ok());
        assert!(d.check(&params(&[("a", c(-2.0, 1e-9))])).is_ok());
        let e = d.check(&params(&[("a", c(-2.0, 0.0))])).unwrap_err();
        assert!(e.to_string().contains("(−∞, −1) excluded"), "{e}");
        assert!(matches!(
            d.check(&Params::new()),
            Err(Error::MissingParameter(_))
        ));
    }

    #[test]
    fn union_of_rays() {
        let d = ParameterDomain::complex(
            "a",
            &[RealSet::below(-1.0, true), RealSet::above(0.0, true)],
        );
        assert_eq!(d.description(), "a ∈ ℂ∖((−∞, −1] ∪ [0, ∞))");
        assert!(d.check(&params(&[("a", c(0.0, 0.0))])).is_err());
        assert!(d.check(&params(&[("a", c(-0.5, 0.0))])).is_ok());
        assert!((d.margin(&params(&[("a", c(-0.5, 0.0))])) - 0.5).abs() < 1e-15);
        assert!((d.margin(&params(&[("a", c(2.0, 0.3))])) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn disks_intervals_and_integers() {
        let d = ParameterDomain::complex_disk("z", &[RealSet::point(0.0)], 1.0, false);
        assert!(d.check(&params(&[("z", c(0.0, 0.99))])).is_ok());
        assert!(d.check(&params(&[("z", c(0.0, 1.0))])).is_err());
        assert!(d.check(&params(&[("z", c(0.0, 0.0))])).is_err());
        let r = ParameterDomain::real("z", RealSet::open(0.0, 1.0));
        assert!(r.check(&params(&[("z", c(0.5, 0.1))])).is_err());
        assert!(r.check(&params(&[("z", c(1.0, 0.0))])).is_err());
        let n = ParameterDomain::integers("m", 2, 5);
        assert!(n.check(&params(&[("m", c(2.5, 0.0))])).is_err());
        assert!(n.check(&params(&[("m", c(6.0, 0.0))])).is_err());
        assert!(n.check(&params(&[("m", c(3.0, 0.0))])).is_ok());
    }

    #[test]
    fn random_samples_are_interior() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let d = ParameterDomain::complex(
            "a",
            &[RealSet::below(-1.0, true), RealSet::above(0.0, true)],
        );
        for _ in 0..200 {
            let p = d.random_sample(&mut rng).unwrap();
            assert!(d.check(&p).is_ok());
            assert!(d.margin(&p) >= INTERIOR_MARGIN);
        }
    }
}
