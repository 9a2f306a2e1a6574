//! Identity catalog and verification driver.

mod catalog;
pub mod domain;
mod estimate;
pub mod report;

use num_complex::Complex64;
use once_cell::sync::Lazy;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub use domain::{ParameterDomain, Params, RealSet};
pub use estimate::Estimate;

pub const DEFAULT_TOL: f64 = 1e-9;

/// Numerical side of an identity: quadrature or series with an error bound.
pub type LhsFn = fn(&Params, f64) -> Result<Estimate>;
/// Closed-form side.
pub type RhsFn = fn(&Params) -> Result<Complex64>;

pub struct IdentityRecord {
    pub id: &'static str,
    pub title: &'static str,
    pub anchor: &'static str,
    pub domain: ParameterDomain,
    pub lhs: LhsFn,
    pub rhs: RhsFn,
    pub default_samples: Vec<Params>,
    /// Points near the domain boundary, run only on request.
    pub stress_samples: Vec<Params>,
    pub default_tol: f64,
    pub note: Option<fn(&Params) -> Option<&'static str>>,
}

impl std::fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("domain", &self.domain.description())
            .field("samples", &self.default_samples.len())
            .finish()
    }
}

static CATALOG: Lazy<Vec<IdentityRecord>> = Lazy::new(|| {
    let mut v = catalog::build();
    v.sort_by(|a, b| a.id.cmp(b.id));
    v
});

pub fn catalog() -> &'static [IdentityRecord] {
    &CATALOG
}

pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    CATALOG
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationResult {
    pub id: String,
    pub title: String,
    pub anchor: String,
    pub params: Params,
    pub lhs_value: Complex64,
    pub rhs_value: Complex64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub lhs_error_estimate: f64,
    pub tol: f64,
    pub pass: bool,
    pub diagnostics: String,
    /// Set when the sample lies outside the identity's domain.
    pub domain_error: bool,
}

fn passes(abs: f64, tol: f64, err: f64) -> bool {
    abs <= tol.max(10.0 * err)
}

/// Evaluate one identity at one parameter point.
///
/// Points outside the domain are rejected with a domain error. Any other
/// evaluation failure yields a failed result carrying the message.
pub fn evaluate_identity(id: &str, p: &Params, tol: Option<f64>) -> Result<VerificationResult> {
    let rec = lookup(id)?;
    evaluate_record(rec, p, tol.unwrap_or(rec.default_tol), false)
}

fn evaluate_record(
    rec: &IdentityRecord,
    p: &Params,
    tol: f64,
    stress: bool,
) -> Result<VerificationResult> {
    rec.domain.check(p)?;
    let mut base = VerificationResult {
        id: rec.id.to_string(),
        title: rec.title.to_string(),
        anchor: rec.anchor.to_string(),
        params: p.clone(),
        lhs_value: Complex64::new(f64::NAN, f64::NAN),
        rhs_value: Complex64::new(f64::NAN, f64::NAN),
        abs_residual: f64::NAN,
        rel_residual: f64::NAN,
        lhs_error_estimate: f64::NAN,
        tol,
        pass: false,
        diagnostics: String::new(),
        domain_error: false,
    };
    let mut notes = Vec::new();
    if stress {
        notes.push("stress tier".to_string());
    }
    if let Some(note) = rec.note.and_then(|f| f(p)) {
        notes.push(note.to_string());
    }
    let sides = (rec.lhs)(p, 0.1 * tol).and_then(|l| Ok((l, (rec.rhs)(p)?)));
    match sides {
        Ok((lhs, rhs)) => {
            let abs = (lhs.value() - rhs).norm();
            let rn = rhs.norm();
            base.lhs_value = lhs.value();
            base.rhs_value = rhs;
            base.abs_residual = abs;
            base.rel_residual = if rn > 0.0 { abs / rn } else { abs };
            base.lhs_error_estimate = lhs.error();
            base.pass = passes(abs, tol, lhs.error());
            notes.insert(
                0,
                format!(
                    "lhs error bound {:.3e} from {} evaluations",
                    lhs.error(),
                    lhs.evaluations()
                ),
            );
        }
        Err(e) if e.is_domain_error() => return Err(e),
        Err(e) => notes.insert(0, format!("evaluation failed: {e}")),
    }
    base.diagnostics = notes.join("; ");
    Ok(base)
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub tol: f64,
    pub parallelism: usize,
    /// Glob on identity IDs.
    pub filter: Option<String>,
    /// Points per identity; defaults first, then seeded random interior points.
    pub samples: Option<usize>,
    pub seed: u64,
    pub stress: bool,
    /// Replaces every selected identity's samples.
    pub sample_override: Option<Vec<Params>>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tol: DEFAULT_TOL,
            parallelism: 1,
            filter: None,
            samples: None,
            seed: 0,
            stress: false,
            sample_override: None,
        }
    }
}

/// Catalog entries whose ID matches a glob.
pub fn select(filter: Option<&str>) -> Result<Vec<&'static IdentityRecord>> {
    let Some(f) = filter else {
        return Ok(CATALOG.iter().collect());
    };
    let pat = glob::Pattern::new(f).map_err(|e| Error::domain("--id", e.to_string()))?;
    Ok(CATALOG.iter().filter(|r| pat.matches(r.id)).collect())
}

/// FNV-1a, fixed so seeded sampling does not depend on the toolchain.
fn id_hash(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// The sample points verify would run for one identity, paired with the
/// stress flag.
pub fn samples_for(rec: &IdentityRecord, opts: &VerifyOptions) -> Vec<(Params, bool)> {
    if let Some(o) = &opts.sample_override {
        return o.iter().map(|p| (p.clone(), false)).collect();
    }
    let mut out: Vec<(Params, bool)> = match opts.samples {
        None => rec
            .default_samples
            .iter()
            .map(|p| (p.clone(), false))
            .collect(),
        Some(n) => {
            let mut v: Vec<(Params, bool)> = rec
                .default_samples
                .iter()
                .take(n)
                .map(|p| (p.clone(), false))
                .collect();
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ id_hash(rec.id));
            let mut attempts = 0;
            while v.len() < n && attempts < 100 * n {
                attempts += 1;
                match rec.domain.random_sample(&mut rng) {
                    Some(p) => v.push((p, false)),
                    None => break,
                }
            }
            v
        }
    };
    if opts.stress {
        out.extend(rec.stress_samples.iter().map(|p| (p.clone(), true)));
    }
    out
}

/// Outcome of a single sample in a sweep.
pub type SampleOutcome = std::result::Result<VerificationResult, (String, Params, Error)>;

/// Run every selected identity at its samples. Output is ordered by
/// (id, sample index) whatever the thread count.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<SampleOutcome>> {
    let recs = select(opts.filter.as_deref())?;
    let jobs: Vec<(&IdentityRecord, Params, bool)> = recs
        .iter()
        .flat_map(|r| {
            samples_for(r, opts)
                .into_iter()
                .map(move |(p, s)| (*r, p, s))
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.parallelism.max(1))
        .build()
        .map_err(|e| Error::domain("--parallelism", e.to_string()))?;
    let out = pool.install(|| {
        jobs.par_iter()
            .map(|(r, p, stress)| {
                evaluate_record(r, p, opts.tol, *stress)
                    .map_err(|e| (r.id.to_string(), p.clone(), e))
            })
            .collect()
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::domain::params;
    use super::*;
    use crate::numerics::constants::PI;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn catalog_integrity() {
        let cat = catalog();
        assert!(cat.len() >= 45, "{}", cat.len());
        assert!(lookup("R1").unwrap().anchor.contains("(qot1)"));
        for r in cat {
            assert!(r.default_tol >= 1e-12);
            assert!(!r.default_samples.is_empty(), "{}", r.id);
            for p in &r.default_samples {
                r.domain
                    .check(p)
                    .unwrap_or_else(|e| panic!("{} {:?}: {e}", r.id, p));
            }
        }
        let mut ids: Vec<_> = cat.iter().map(|r| r.id).collect();
        ids.dedup();
        assert_eq!(ids.len(), cat.len());
        for r in &lookup("T1a").unwrap().default_samples {
            let a = r["a"];
            assert!(!(a.im == 0.0 && a.re <= -1.0));
        }
    }

    #[test]
    fn required_ids_present() {
        for id in [
            "L1", "L2", "L3", "L4", "R1", "T1a", "T1b", "SV1", "SV2", "SV3", "T2", "T3", "T4",
            "T5", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E7b", "E8a", "E8b", "E8c", "E9", "A1",
            "A2", "A3", "A4", "A5", "J1", "J2", "D0", "D1", "H1", "H2", "H3", "H4", "B1", "B1o",
            "B1e", "C1", "C2", "B2", "B3", "B4", "B5", "S1", "HK", "AB3",
        ] {
            lookup(id).unwrap();
        }
        assert!(matches!(lookup("nope"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn single_evaluations() {
        let sv3 = evaluate_identity("SV3", &Params::new(), None).unwrap();
        assert!(sv3.pass, "{sv3:?}");
        assert!((sv3.rhs_value.re + PI.powi(4) / 60.0).abs() < 1e-12);
        let j2 = evaluate_identity("J2", &params(&[("a", c(1.0))]), None).unwrap();
        assert!(j2.pass);
        assert!((j2.rhs_value.re + 7.0 * PI.powi(4) / 360.0).abs() < 1e-13);
        let t3 = evaluate_identity("T3", &params(&[("a", c(1.0))]), None).unwrap();
        let r1 = evaluate_identity("R1", &Params::new(), None).unwrap();
        assert!(t3.pass);
        assert!((t3.rhs_value - r1.rhs_value).norm() < 1e-12);
    }

    #[test]
    fn outside_domain_is_rejected() {
        let e = evaluate_identity("T1a", &params(&[("a", c(-2.0))]), None).unwrap_err();
        assert!(e.is_domain_error());
        assert!(e.to_string().contains("(−∞, −1) excluded"), "{e}");
        let e = evaluate_identity("T3", &params(&[("a", c(-2.0))]), None).unwrap_err();
        assert!(e.is_domain_error());
    }

    #[test]
    fn glob_filter() {
        let h = select(Some("H*")).unwrap();
        assert!(h.len() >= 4);
        assert!(h.iter().all(|r| r.id.starts_with('H')));
        assert!(select(Some("[")).is_err());
    }

    #[test]
    fn random_samples_are_seeded() {
        let rec = lookup("T1a").unwrap();
        let o = VerifyOptions {
            samples: Some(12),
            seed: 7,
            ..Default::default()
        };
        let a = samples_for(rec, &o);
        let b = samples_for(rec, &o);
        assert_eq!(a.len(), 12);
        assert_eq!(a, b);
        for (p, _) in &a {
            rec.domain.check(p).unwrap();
        }
    }
}
