//! End-to-end checks, one line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use polyverify::numerics::constants::{PI, ZETA3};
use polyverify::numerics::{polygamma_real, riemann_zeta};
use polyverify::polylog::{hurwitz_zeta, hurwitz_zeta_em, li4};
use polyverify::registry::domain::params;
use polyverify::registry::report::jsonl;
use polyverify::registry::{
    catalog, evaluate_identity, lookup, verify_all, Params, VerificationResult, VerifyOptions,
};
use polyverify::series::{double_series_truncated, geometric_tail, power_tail, transform_rhs};

type Check = Result<String, String>;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn eval(id: &str, p: &Params, tol: f64) -> Result<VerificationResult, String> {
    evaluate_identity(id, p, Some(tol)).map_err(|e| format!("{id}: {e}"))
}

fn defaults(id: &str) -> Vec<Params> {
    lookup(id)
        .map(|r| r.default_samples.clone())
        .unwrap_or_default()
}

fn within(r: &VerificationResult, bound: f64) -> Result<(), String> {
    if r.abs_residual < bound {
        Ok(())
    } else {
        Err(format!(
            "{} at {:?}: residual {:.3e} ≥ {bound:e}",
            r.id, r.params, r.abs_residual
        ))
    }
}

fn timed(limit: Duration, what: &str, t: Instant) -> Result<Duration, String> {
    let e = t.elapsed();
    if e < limit {
        Ok(e)
    } else {
        Err(format!("{what} took {e:?}, limit {limit:?}"))
    }
}

fn criterion_1() -> Check {
    let t = Instant::now();
    let r = eval("R1", &Params::new(), 1e-10)?;
    let e = timed(Duration::from_secs(1), "R1", t)?;
    within(&r, 1e-10)?;
    // the closed form rebuilt here from library calls
    let l2 = 2f64.ln();
    let rhs = l2.powi(4) / 12.0 - PI * PI * l2 * l2 / 12.0 - PI.powi(4) / 60.0
        + 7.0 * l2 * ZETA3 / 4.0
        + 2.0 * li4(c(0.5)).map_err(|e| e.to_string())?.re;
    // 30-digit quadrature reference
    let reference = 0.493_656_884_210_332_1;
    let d = (r.rhs_value.re - rhs)
        .abs()
        .max((r.lhs_value.re - reference).abs());
    if d > 1e-14 {
        return Err(format!("R1 differs from the rebuilt constant by {d:e}"));
    }
    Ok(format!("R1 residual {:.2e} in {e:.2?}", r.abs_residual))
}

fn criterion_2() -> Check {
    let t = Instant::now();
    let mut worst = 0f64;
    for id in ["L1", "L2", "L3", "L4"] {
        for p in defaults(id) {
            let r = eval(id, &p, 1e-9)?;
            within(&r, 1e-8)?;
            worst = worst.max(r.abs_residual);
        }
    }
    let e = timed(Duration::from_secs(5), "L1–L4", t)?;
    Ok(format!("L1–L4 worst residual {worst:.2e} in {e:.2?}"))
}

fn criterion_3() -> Check {
    let p4 = PI.powi(4);
    let mut out = Vec::new();
    for (id, v) in [
        ("SV1", p4 / 480.0),
        ("SV2", p4 / 240.0),
        ("SV3", -p4 / 60.0),
    ] {
        let r = eval(id, &Params::new(), 1e-10)?;
        within(&r, 1e-10)?;
        if (r.lhs_value.re - v).abs() >= 1e-10 {
            return Err(format!("{id}: lhs {} vs {v}", r.lhs_value.re));
        }
        out.push(format!("{id} {:.1e}", (r.lhs_value.re - v).abs()));
    }
    Ok(out.join(", "))
}

fn criterion_4() -> Check {
    let mut total = 0;
    for id in ["T1a", "T1b", "T2", "T3", "T4", "T5"] {
        let samples = defaults(id);
        if samples.len() < 7 {
            return Err(format!("{id} has only {} samples", samples.len()));
        }
        let a: Vec<Complex64> = samples.iter().map(|p| p["a"]).collect();
        let off_axis = a.iter().filter(|z| z.im != 0.0).count();
        let positive = a
            .iter()
            .filter(|z| z.im == 0.0 && z.re > 0.0 && z.re <= 2.0)
            .count();
        if off_axis < 4 {
            return Err(format!("{id}: {off_axis} off-axis samples"));
        }
        let rec = lookup(id).map_err(|e| e.to_string())?;
        let admits_positive = rec.domain.check(&params(&[("a", c(1.0))])).is_ok();
        let admits_negative = rec.domain.check(&params(&[("a", c(-0.5))])).is_ok();
        if admits_positive && positive < 3 {
            return Err(format!("{id}: {positive} samples in (0, 2]"));
        }
        if admits_negative
            && a.iter()
                .filter(|z| z.im == 0.0 && z.re > -1.0 && z.re < 0.0)
                .count()
                < 2
        {
            return Err(format!("{id}: fewer than 2 samples in (−1, 0)"));
        }
        for p in samples {
            let r = eval(id, &p, 1e-9)?;
            if !(r.abs_residual < 1e-9f64.max(10.0 * r.lhs_error_estimate)) {
                return Err(format!("{id} at {:?}: residual {:.3e}", p, r.abs_residual));
            }
            total += 1;
        }
    }
    Ok(format!("{total} samples across six families"))
}

fn criterion_5() -> Check {
    let j1 = defaults("J1");
    let j2 = defaults("J2");
    if j1.len() < 25 || j2.len() < 50 {
        return Err(format!("J1 {} points, J2 {} points", j1.len(), j2.len()));
    }
    let mut worst = 0f64;
    for (id, set) in [("J1", &j1), ("J2", &j2)] {
        for p in set {
            let r = eval(id, p, 1e-11)?;
            within(&r, 1e-11)?;
            worst = worst.max(r.abs_residual);
        }
    }
    Ok(format!(
        "{} + {} points, worst residual {worst:.2e}",
        j1.len(),
        j2.len()
    ))
}

fn criterion_6() -> Check {
    const SHELLS: u64 = 2000;
    let z2 = PI * PI / 6.0;
    let z4 = PI.powi(4) / 90.0;
    let mut lines = Vec::new();

    // f(k, j) = 1/(k+j)⁴ + 1/(k²j²)
    let f = |n: u64, j: u64| {
        let (n, j) = (n as f64, j as f64);
        c(1.0 / (n + j).powi(4) + 1.0 / (n * n * j * j))
    };
    let lhs = double_series_truncated(f, |n| 0.5 / (n as f64).powi(2) + z2 / n as f64, SHELLS);
    let rhs = 0.5 * ((ZETA3 - z4) + z2 * z2 + z4 / 16.0 + z4);
    let d = (lhs.value.re - rhs).abs();
    if d > lhs.total_error() {
        return Err(format!("D0: {d:e} exceeds tail {:e}", lhs.total_error()));
    }
    lines.push(format!("D0 {d:.1e} ≤ {:.1e}", lhs.total_error()));

    type Case = (&'static str, fn(u64) -> f64, f64, f64);
    // name, f, geometric ratio q, power p (0 for the geometric cases)
    let cases: [Case; 4] = [
        ("1/k²", |k| 1.0 / (k as f64).powi(2), 1.0, 2.0),
        ("1/k³", |k| 1.0 / (k as f64).powi(3), 1.0, 3.0),
        ("0.7ᵏ/k", |k| 0.7f64.powi(k as i32) / k as f64, 0.7, 0.0),
        ("(−0.6)ᵏ", |k| (-0.6f64).powi(k as i32), -0.6, 0.0),
    ];
    for (name, g, q, p) in cases {
        // shell n of ∑_j ∑_{k≥0} g(k+j) g(j) is g(n)∑_{j≤n} g(j): bounded by
        // |g(n)|·∑|g|
        let abs_sum: f64 = if p > 0.0 {
            riemann_zeta(p).unwrap()
        } else {
            q.abs() / (1.0 - q.abs())
        };
        let shell_tail = move |n: u64| {
            let n = n as f64;
            if p > 0.0 {
                abs_sum * n.powf(1.0 - p) / (p - 1.0)
            } else {
                abs_sum * q.abs().powf(n + 1.0) / (1.0 - q.abs())
            }
        };
        let lhs = double_series_truncated(|n, j| c(g(n) * g(j)), shell_tail, SHELLS);
        let rhs = if p > 0.0 {
            transform_rhs(
                (|k: u64| c(g(k)), power_tail(1.0, p)),
                (|k: u64| c(g(k) * g(k)), power_tail(1.0, 2.0 * p)),
                1e-6,
            )
        } else {
            transform_rhs(
                (|k: u64| c(g(k)), geometric_tail(1.0, q.abs())),
                (|k: u64| c(g(k) * g(k)), geometric_tail(1.0, q * q)),
                1e-13,
            )
        }
        .map_err(|e| format!("{name}: {e}"))?;
        let d = (lhs.value - rhs.value).norm();
        let bound = lhs.total_error() + rhs.total_error();
        if d > bound {
            return Err(format!("{name}: {d:e} exceeds {bound:e}"));
        }
        lines.push(format!("{name} {d:.1e} ≤ {bound:.1e}"));
    }
    Ok(lines.join(", "))
}

fn criterion_7() -> Check {
    let mut has_half = false;
    let mut worst = 0f64;
    for p in defaults("H1") {
        if p["m"].re == 2.5 {
            has_half = true;
        }
        let r = eval("H1", &p, 1e-9)?;
        within(&r, 1e-9)?;
        worst = worst.max(r.abs_residual);
    }
    if !has_half {
        return Err("H1 grid lacks m = 2.5".into());
    }
    // the printed m = 2 line, rebuilt here
    let g = polyverify::numerics::constants::CATALAN;
    let m2 = 2.0 * g * g - g * PI * PI / 2.0
        + PI.powi(4) / 32.0
        + polygamma_real(3, 0.75).unwrap() / 192.0;
    let mut printed = 0;
    for m in 2..=5 {
        let r = eval("H3e", &params(&[("m", c(m as f64))]), 1e-9)?;
        within(&r, 1e-9)?;
        if m == 2 && (r.rhs_value.re - m2).abs() > 1e-12 {
            return Err(format!("H3e m = 2 value {} vs {m2}", r.rhs_value.re));
        }
        printed += 1;
    }
    Ok(format!(
        "H1 worst residual {worst:.2e}, {printed} printed examples"
    ))
}

fn criterion_8() -> Check {
    let mut lines = Vec::new();
    let firsts = [
        ("B2e", PI.powi(4) / 288.0 - ZETA3 / 4.0),
        ("B4e", PI.powi(4) / 1024.0 - 7.0 * ZETA3 / 128.0),
    ];
    for (id, v) in firsts {
        let t = Instant::now();
        let r = eval(id, &params(&[("m", c(1.0))]), 1e-9)?;
        timed(Duration::from_secs(10), id, t)?;
        if (r.lhs_value.re - v).abs() >= 1e-8 {
            return Err(format!("{id} m = 1: {} vs {v}", r.lhs_value.re));
        }
        lines.push(format!("{id}(1) {:.1e}", (r.lhs_value.re - v).abs()));
    }
    for id in ["B2e", "B3e", "B4e", "B5e"] {
        for m in [2.0, 3.0] {
            let t = Instant::now();
            let r = eval(id, &params(&[("m", c(m))]), 1e-9)?;
            timed(Duration::from_secs(10), id, t)?;
            within(&r, 1e-7)?;
        }
    }
    lines.push("eight m = 2, 3 examples".into());
    Ok(lines.join(", "))
}

fn criterion_9() -> Check {
    let mut worst = 0f64;
    for s in [2.0, 3.0, 4.0, 5.0, 7.0] {
        for z in [0.25, 0.5, 0.75, 1.0, 2.0] {
            let h = hurwitz_zeta(s, c(z)).map_err(|e| e.to_string())?.re;
            let e = hurwitz_zeta_em(s, z).map_err(|e| e.to_string())?;
            worst = worst.max((h - e).abs());
        }
    }
    for m in 2..=4u32 {
        let fact: f64 = (1..m).map(f64::from).product();
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        for z in [0.25, 0.75, 1.0, 2.5] {
            let psi = polygamma_real(m - 1, z).map_err(|e| e.to_string())?;
            let zeta = hurwitz_zeta_em(m as f64, z).map_err(|e| e.to_string())?;
            worst = worst.max((psi - sign * fact * zeta).abs());
        }
    }
    if worst < 1e-11 {
        Ok(format!("worst disagreement {worst:.2e}"))
    } else {
        Err(format!("worst disagreement {worst:.2e}"))
    }
}

fn sweep(parallelism: usize) -> Result<(String, usize, Duration), String> {
    let t = Instant::now();
    let out = verify_all(&VerifyOptions {
        parallelism,
        ..Default::default()
    })
    .map_err(|e| e.to_string())?;
    let e = t.elapsed();
    let mut results = Vec::new();
    for o in out {
        match o {
            Ok(r) if r.pass => results.push(r),
            Ok(r) => {
                return Err(format!(
                    "{} failed at {:?}: {}",
                    r.id, r.params, r.diagnostics
                ))
            }
            Err((id, p, err)) => return Err(format!("{id} at {p:?}: {err}")),
        }
    }
    Ok((jsonl(&results), results.len(), e))
}

fn criterion_10() -> Check {
    let n = catalog().len();
    if n < 45 {
        return Err(format!("catalog has {n} entries"));
    }
    let (a, count, t8) = sweep(8)?;
    if t8 >= Duration::from_secs(60) {
        return Err(format!("parallel sweep took {t8:?}"));
    }
    let (b, _, t1) = sweep(1)?;
    if t1 >= Duration::from_secs(300) {
        return Err(format!("single-threaded sweep took {t1:?}"));
    }
    if a != b {
        return Err("reports differ between parallelism 8 and 1".into());
    }
    Ok(format!(
        "{n} identities, {count} samples, {t8:.2?} at 8 threads, {t1:.2?} at 1, identical reports"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("R1 integral", criterion_1),
        ("L1–L4 sums", criterion_2),
        ("special values", criterion_3),
        ("T families", criterion_4),
        ("order-4 inversion", criterion_5),
        ("double series", criterion_6),
        ("Hurwitz series", criterion_7),
        ("Bose examples", criterion_8),
        ("Hermite and polygamma links", criterion_9),
        ("full sweep", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {:>2} PASS {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
