use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use num_complex::Complex64;
use polyverify::numerics::{digamma, polygamma, riemann_zeta};
use polyverify::polylog::{hurwitz_zeta, li2, li3, li4};
use polyverify::registry::report;
use polyverify::registry::{self, Params, VerificationResult, VerifyOptions};
use polyverify::Error;

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const DOMAIN: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "polyverify",
    version,
    about = "Evaluate special functions and verify closed-form identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print catalog IDs with their source anchors.
    List,
    /// Evaluate one function: li2|li3|li4 <re> [im], hurwitz <s> <re> [im],
    /// polygamma <m> <re> [im], digamma <re> [im], zeta <s>.
    Eval {
        function: String,
        #[arg(allow_negative_numbers = true, num_args = 1..)]
        args: Vec<String>,
    },
    /// Run identity verification.
    Verify(VerifyArgs),
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// Glob on identity IDs.
    #[arg(long = "id")]
    id: Option<String>,
    #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
    tol: f64,
    /// Write JSON lines to this file instead of stdout.
    #[arg(long)]
    jsonl: Option<String>,
    /// Print a human-readable table to stdout.
    #[arg(long)]
    table: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    parallelism: u64,
    /// Points per identity; extra points are drawn from the domain with --seed.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include the boundary tier of samples.
    #[arg(long)]
    stress: bool,
    /// After `--`: `--sample name=value[,im]` replaces the sample points.
    #[arg(last = true, allow_hyphen_values = true)]
    extra: Vec<String>,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (1e-13..=1e-3).contains(&t) {
        Ok(t)
    } else {
        Err(format!("tolerance {t} outside [1e-13, 1e-3]"))
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}\n");
    let _ = Cli::command().print_help();
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match cli.command {
        Command::List => list(),
        Command::Eval { function, args } => eval(&function, &args),
        Command::Verify(v) => verify(v),
    }
}

fn list() -> ExitCode {
    let mut out = std::io::stdout().lock();
    for r in registry::catalog() {
        let _ = writeln!(
            out,
            "{:<5} {:<50} {}",
            r.id,
            r.domain.description(),
            r.anchor
        );
    }
    ExitCode::from(OK)
}

fn num(s: &str) -> Result<f64, String> {
    s.parse::<f64>().map_err(|_| format!("not a number: {s}"))
}

fn complex_arg(args: &[String]) -> Result<Complex64, String> {
    match args {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err("expected <re> [im]".into()),
    }
}

fn fmt_value(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.16e}", z.re)
    } else {
        format!("{:.16e} {:.16e}", z.re, z.im)
    }
}

fn eval(function: &str, args: &[String]) -> ExitCode {
    let parsed: Result<Result<Complex64, Error>, String> = (|| {
        Ok(match function {
            "li2" => li2(complex_arg(args)?),
            "li3" => li3(complex_arg(args)?),
            "li4" => li4(complex_arg(args)?),
            "digamma" => digamma(complex_arg(args)?),
            "hurwitz" => {
                let (s, rest) = args.split_first().ok_or("expected <s> <re> [im]")?;
                hurwitz_zeta(num(s)?, complex_arg(rest)?)
            }
            "polygamma" => {
                let (m, rest) = args.split_first().ok_or("expected <m> <re> [im]")?;
                let m: u32 = m
                    .parse()
                    .map_err(|_| format!("order must be a non-negative integer: {m}"))?;
                polygamma(m, complex_arg(rest)?)
            }
            "zeta" => match args {
                [s] => riemann_zeta(num(s)?).map(|v| Complex64::new(v, 0.0)),
                _ => return Err("expected <s>".into()),
            },
            other => return Err(format!("unknown function `{other}`")),
        })
    })();
    match parsed {
        Err(msg) => usage_error(&msg),
        Ok(Ok(v)) => {
            println!("{}", fmt_value(v));
            ExitCode::from(OK)
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_domain_error() { DOMAIN } else { FAILED })
        }
    }
}

/// `--sample a=-2 --sample b=0.5,0.1` → one parameter point.
fn parse_samples(extra: &[String]) -> Result<Option<Vec<Params>>, String> {
    if extra.is_empty() {
        return Ok(None);
    }
    let mut point = Params::new();
    let mut it = extra.iter();
    while let Some(flag) = it.next() {
        let spec = match flag.strip_prefix("--sample") {
            Some("") => it.next().ok_or("--sample needs name=value")?.as_str(),
            Some(rest) if rest.starts_with('=') => &rest[1..],
            _ => return Err(format!("unexpected argument `{flag}` after --")),
        };
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got `{spec}`"))?;
        let parts: Vec<String> = value.split(',').map(str::to_string).collect();
        point.insert(name.to_string(), complex_arg(&parts)?);
    }
    Ok(Some(vec![point]))
}

fn verify(v: VerifyArgs) -> ExitCode {
    let sample_override = match parse_samples(&v.extra) {
        Ok(s) => s,
        Err(msg) => return usage_error(&msg),
    };
    let selected = match registry::select(v.id.as_deref()) {
        Ok(s) => s,
        Err(e) => return usage_error(&format!("invalid --id pattern: {e}")),
    };
    if selected.is_empty() {
        return usage_error(&format!(
            "unknown identity `{}`",
            v.id.as_deref().unwrap_or("")
        ));
    }
    let opts = VerifyOptions {
        tol: v.tol,
        parallelism: v.parallelism as usize,
        filter: v.id.clone(),
        samples: v.samples.map(|n| n as usize),
        seed: v.seed,
        stress: v.stress,
        sample_override,
    };
    let outcomes = match registry::verify_all(&opts) {
        Ok(o) => o,
        Err(e) => return usage_error(&e.to_string()),
    };

    let mut results: Vec<VerificationResult> = Vec::new();
    let mut code = OK;
    for o in outcomes {
        match o {
            Ok(r) => {
                if !r.pass && code == OK {
                    code = FAILED;
                }
                results.push(r);
            }
            Err((id, _, e)) => {
                eprintln!("error: {id}: {e}");
                code = if e.is_domain_error() {
                    DOMAIN
                } else {
                    code.max(FAILED)
                };
            }
        }
    }

    let lines = report::jsonl(&results);
    match &v.jsonl {
        Some(path) => {
            if let Err(e) = fs::write(path, &lines) {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(FAILED);
            }
        }
        None if !v.table => print!("{lines}"),
        None => {}
    }
    if v.table {
        print!("{}", report::table(&results));
    }
    let passed = results.iter().filter(|r| r.pass).count();
    eprintln!("{passed}/{} passed", results.len());
    ExitCode::from(code)
}
