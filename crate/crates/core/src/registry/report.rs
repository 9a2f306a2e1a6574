//! JSONL and table rendering of verification results.

use std::fmt::Write;

use num_complex::Complex64;

use super::VerificationResult;

fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn pair(z: Complex64) -> String {
    format!("[{},{}]", num(z.re), num(z.im))
}

fn string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization")
}

/// One JSON object on one line, keys in a fixed order, floats with 17
/// significant digits.
pub fn jsonl_line(r: &VerificationResult) -> String {
    let params: Vec<String> = r
        .params
        .iter()
        .map(|(k, v)| format!("{}:{}", string(k), pair(*v)))
        .collect();
    format!(
        "{{\"id\":{},\"title\":{},\"anchor\":{},\"params\":{{{}}},\"lhs\":{},\"rhs\":{},\"abs_residual\":{},\"rel_residual\":{},\"tol\":{},\"pass\":{},\"diagnostics\":{}}}",
        string(&r.id),
        string(&r.title),
        string(&r.anchor),
        params.join(","),
        pair(r.lhs_value),
        pair(r.rhs_value),
        num(r.abs_residual),
        num(r.rel_residual),
        num(r.tol),
        r.pass,
        string(&r.diagnostics),
    )
}

pub fn jsonl(results: &[VerificationResult]) -> String {
    let mut s = String::new();
    for r in results {
        s.push_str(&jsonl_line(r));
        s.push('\n');
    }
    s
}

fn tnum(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.11e}")
    } else {
        "nan".to_string()
    }
}

fn tc(z: Complex64) -> String {
    if z.im == 0.0 {
        tnum(z.re)
    } else {
        format!(
            "{}{}{}i",
            tnum(z.re),
            if z.im < 0.0 { "" } else { "+" },
            tnum(z.im)
        )
    }
}

fn tparams(r: &VerificationResult) -> String {
    if r.params.is_empty() {
        return "-".to_string();
    }
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={}", tc(*v)))
        .collect::<Vec<_>>()
        .join(",")
}

/// Fixed-width table, 12 significant digits.
pub fn table(results: &[VerificationResult]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<5} {:<4} {:<40} {:<40} {:<40} {:<18} {:<18}",
        "id", "ok", "params", "lhs", "rhs", "abs_residual", "tol"
    );
    for r in results {
        let _ = writeln!(
            s,
            "{:<5} {:<4} {:<40} {:<40} {:<40} {:<18} {:<18}",
            r.id,
            if r.pass { "pass" } else { "FAIL" },
            tparams(r),
            tc(r.lhs_value),
            tc(r.rhs_value),
            tnum(r.abs_residual),
            tnum(r.tol),
        );
    }
    s
}
