//! The `s3ca` verbs and their text and JSON renderings.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use s3ca::cocycle::{cocycle, graded_cocycle};
use s3ca::current::{cur_bracket_with, root_space_basis, weight_of, CentralMode};
use s3ca::spinor::expand;
use s3ca::suites::{run_suite, Report, Status, SuiteParams, SCHEMA, SUITES};
use s3ca::{LaurentPoly, MathError};

use crate::examples::catalog;
use crate::expr::{parse_ast, parse_spinor};
use crate::oracle::normint_quadrature;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "s3ca", about = "Exact current algebras on S3", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Compares the exact normalized integral of a polynomial with quadrature.
    #[arg(long, hide = true)]
    oracle: Option<String>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bracket of two current-algebra elements.
    Bracket {
        a: String,
        b: String,
        /// Matrix size (inferred from the indices when omitted).
        #[arg(long)]
        n: Option<usize>,
        /// Use the raw central term instead of the degree-balanced one.
        #[arg(long)]
        raw: bool,
    },
    /// Value c_k(p, q) of a cocycle on two spinors.
    Cocycle {
        #[arg(long)]
        k: usize,
        /// Degree-balanced cocycle.
        #[arg(long)]
        graded: bool,
        p: String,
        q: String,
    },
    /// Expansion of a spinor in the phi basis on S3.
    Expand {
        p: String,
        #[arg(long)]
        m_bound: Option<u32>,
    },
    /// Root-space bases in a degree window, with their verified weights.
    Weights {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Range a..b of homogeneity degrees.
        #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
        m: String,
        /// Highest basis level used for products.
        #[arg(long, default_value_t = 1)]
        level: u32,
        /// Largest number of factors in a product.
        #[arg(long, default_value_t = 2)]
        factors: usize,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Replays the catalog of worked examples.
    Examples,
}

#[derive(Serialize)]
struct Value<'a> {
    schema: u32,
    verb: &'a str,
    value: String,
}

#[derive(Serialize)]
struct WeightRow {
    m: i64,
    weight: String,
    dim: usize,
    verified: bool,
}

#[derive(Serialize)]
struct Weights {
    schema: u32,
    n: usize,
    rows: Vec<WeightRow>,
}

#[derive(Serialize)]
struct Examples {
    schema: u32,
    items: Vec<crate::examples::Example>,
}

#[derive(Serialize)]
struct Oracle {
    schema: u32,
    exact: String,
    numeric: (f64, f64),
    agrees: bool,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn value(format: Format, verb: &str, v: impl ToString) -> String {
    let value = v.to_string();
    match format {
        Format::Text => format!("{value}\n"),
        Format::Json => json(&Value {
            schema: SCHEMA,
            verb,
            value,
        }),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || MathError::InvalidArgument(format!("expected a range a..b, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad().into());
    }
    Ok((a, b))
}

fn report_text(r: &Report) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Erratum => "ERRATUM",
        };
        let _ = writeln!(out, "{tag} {}: {} | {}", c.name, c.lhs, c.rhs);
    }
    for w in &r.witnesses {
        let _ = writeln!(out, "WITNESS k={} p={} q={} value={}", w.k, w.p, w.q, w.value);
    }
    let _ = writeln!(out, "{} {}", r.suite, if r.passed() { "passed" } else { "failed" });
    out
}

fn dispatch(cli: Cli) -> Result<(i32, String), CliError> {
    let f = cli.format;
    if let Some(p) = cli.oracle {
        let poly: LaurentPoly = p.parse()?;
        let exact = poly.restrict_s3().normint();
        let num = normint_quadrature(&poly);
        let ok = crate::oracle::agrees(num, exact.to_f64_pair());
        let out = match f {
            Format::Text => format!("exact {exact}\nnumeric {} {}\n{}\n", num.re, num.im, if ok { "agree" } else { "disagree" }),
            Format::Json => json(&Oracle {
                schema: SCHEMA,
                exact: exact.to_string(),
                numeric: (num.re, num.im),
                agrees: ok,
            }),
        };
        return Ok((if ok { 0 } else { 1 }, out));
    }
    let Some(cmd) = cli.command else {
        return Err(MathError::InvalidArgument("missing command; see --help".into()).into());
    };
    match cmd {
        Command::Bracket { a, b, n, raw } => {
            let mode = if raw { CentralMode::Raw } else { CentralMode::Graded };
            let (a, b) = (parse_ast(&a)?, parse_ast(&b)?);
            let n = n.unwrap_or_else(|| a.min_n().max(b.min_n()).max(2));
            let (x, y) = (a.eval(n, mode)?, b.eval(n, mode)?);
            Ok((0, value(f, "bracket", cur_bracket_with(&x, &y, mode)?)))
        }
        Command::Cocycle { k, graded, p, q } => {
            let (p, q) = (parse_spinor(&p)?, parse_spinor(&q)?);
            let v = if graded { graded_cocycle(k, &p, &q)? } else { cocycle(k, &p, &q)? };
            Ok((0, value(f, "cocycle", v)))
        }
        Command::Expand { p, m_bound } => {
            let p = parse_spinor(&p)?;
            Ok((0, value(f, "expand", expand(&p, m_bound)?)))
        }
        Command::Weights { n, m, level, factors } => {
            let (lo, hi) = parse_range(&m)?;
            let mut rows = Vec::new();
            for m in lo..=hi {
                for alpha in s3ca::suites::roots_and_zero(n) {
                    let basis = root_space_basis(m, &alpha, n, level, factors)?;
                    let want = s3ca::current::Weight::new(m, alpha);
                    let verified = basis.iter().all(|x| weight_of(x).map(|w| w == want).unwrap_or(false));
                    rows.push(WeightRow {
                        m,
                        weight: want.to_string(),
                        dim: basis.len(),
                        verified,
                    });
                }
            }
            let ok = rows.iter().all(|r| r.verified);
            let out = match f {
                Format::Text => rows
                    .iter()
                    .map(|r| format!("{} dim={} {}\n", r.weight, r.dim, if r.verified { "verified" } else { "MISMATCH" }))
                    .collect(),
                Format::Json => json(&Weights {
                    schema: SCHEMA,
                    n,
                    rows,
                }),
            };
            Ok((if ok { 0 } else { 1 }, out))
        }
        Command::Verify {
            suite,
            n,
            degree,
            samples,
            seed,
        } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(MathError::InvalidArgument(format!(
                    "unknown suite `{suite}`; expected one of {}",
                    SUITES.join(", ")
                ))
                .into());
            }
            let r = run_suite(
                &suite,
                &SuiteParams {
                    n,
                    degree,
                    samples,
                    seed,
                },
            )?;
            let out = match f {
                Format::Text => report_text(&r),
                Format::Json => json(&r),
            };
            Ok((if r.passed() { 0 } else { 1 }, out))
        }
        Command::Examples => {
            let items = catalog()?;
            let ok = items.iter().all(|e| e.status != Status::Fail);
            let out = match f {
                Format::Text => {
                    let mut s: String = items.iter().map(|e| format!("{}\n", e.line())).collect();
                    let count = |st: Status| items.iter().filter(|e| e.status == st).count();
                    let _ = writeln!(
                        s,
                        "{} pass, {} fail, {} erratum",
                        count(Status::Pass),
                        count(Status::Fail),
                        count(Status::Erratum)
                    );
                    s
                }
                Format::Json => json(&Examples {
                    schema: SCHEMA,
                    items,
                }),
            };
            Ok((if ok { 0 } else { 1 }, out))
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit code and output.
pub fn run<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let args: Vec<&str> = argv.iter().map(|s| s.as_ref()).collect();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(cli) {
        Ok(r) => r,
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}
