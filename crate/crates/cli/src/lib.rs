//! Command-line verification harness: family measures, identity suites and
//! the a = 1 table, with JSON/CSV/Markdown reports.

pub mod record;
pub mod suites;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mahler_core::dirichlet::{l_multi, l_single, CharacterSpec, MultiLSpec};
use mahler_core::hyperlog::{default_branch, eval_hyperlog, li_auto, BranchChoice, HyperlogWord};
use mahler_core::mahler::FamilySpec;
use mahler_core::polylog::MultiIndex;
use mahler_core::script_l::{script_l_r, script_l_r1, script_l_rs, script_l_rs1};
use mahler_core::ValueWithError;
use num_complex::Complex64;

use record::{emit_report, Format, RunConfig, VerificationRecord};
use suites::{family_cases, identity_cases, run_cases, table_cases, thread_count, Method, SAMPLE_POINTS};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mahler", version, about = "Verify Mahler measure formulas numerically")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite and write a report.
    #[command(subcommand)]
    Verify(Verify),
    /// Evaluate a single special value and print it as JSON.
    #[command(subcommand)]
    Eval(Eval),
    /// Re-render a JSON report in another format.
    Report {
        /// JSON report produced by `verify`.
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct NumericOpts {
    #[arg(long, value_enum, default_value = "quad")]
    pub method: Method,
    /// Pass threshold for |lhs - rhs|; defaults to the dimension default.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    First,
    Second,
    Variant,
    Triangle,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Numeric measure against the closed form.
    Family {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long)]
        a: Option<f64>,
        /// Inclusive grid lo:hi:step.
        #[arg(long, conflicts_with = "a")]
        a_grid: Option<String>,
        /// Second and third coefficients for `--kind triangle`.
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[command(flatten)]
        numeric: NumericOpts,
        #[command(flatten)]
        out: Output,
    },
    /// Registered identities (comma-separated ids, or all).
    Identities {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        out: Output,
    },
    /// The seven a = 1 table rows.
    TableA1 {
        #[command(flatten)]
        numeric: NumericOpts,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum Eval {
    /// Li_{n1,...,nm}(x1,...,xm), continued where the series diverges.
    Li {
        /// Indices, e.g. 2,1.
        #[arg(long, value_delimiter = ',', required = true)]
        index: Vec<u32>,
        /// Arguments in order, each "re" or "re,im".
        #[arg(long = "arg", required = true)]
        args: Vec<String>,
    },
    /// I(b1,...,bw ; endpoint) along a chosen branch.
    Hyperlog {
        #[arg(long = "pole", required = true)]
        poles: Vec<String>,
        #[arg(long, default_value = "1")]
        endpoint: String,
        #[arg(long, value_enum, default_value = "auto")]
        branch: Branch,
    },
    /// The orbit sums ℒ^a_r(x), ℒ^a_{r:1}(x), ℒ^a_{r,s}(x,y), ℒ^a_{r,s:1}(x,y).
    ScriptL {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long, default_value = "1")]
        y: String,
        /// Use the log-weighted variant.
        #[arg(long)]
        weighted: bool,
    },
    /// L(χ1,...,χm; s1,...,sm) for characters chi0, chi4sq, chi4.
    LSeries {
        #[arg(long, value_delimiter = ',', required = true)]
        chars: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Branch {
    Auto,
    Real,
    Lower,
    Upper,
}

/// A failure mapped to an exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn internal(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        message: message.to_string(),
    }
}

impl From<mahler_core::Error> for Failure {
    fn from(e: mahler_core::Error) -> Self {
        match e {
            mahler_core::Error::Domain(m) | mahler_core::Error::Divergent(m) => usage(m),
            other => internal(other),
        }
    }
}

pub fn parse_complex(s: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| usage(format!("cannot parse '{s}' as a complex number (re or re,im)")));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(usage(format!("cannot parse '{s}' as a complex number (re or re,im)"))),
    }
}

pub fn parse_grid(s: &str) -> Result<Vec<f64>, Failure> {
    let bad = || usage(format!("a-grid '{s}' must be lo:hi:step with 0 < lo <= hi and step > 0"));
    let v: Vec<f64> = s.split(':').map(|t| t.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let [lo, hi, step] = v.as_slice() else { return Err(bad()) };
    if !(*lo > 0.0 && hi >= lo && *step > 0.0) {
        return Err(bad());
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    if count > 10_000 {
        return Err(usage("a-grid has more than 10000 points"));
    }
    // Rounded to 12 digits so ids read 0.3 rather than 0.30000000000000004.
    Ok((0..=count).map(|k| ((lo + k as f64 * step) * 1e12).round() / 1e12).collect())
}

fn family_specs(kind: Kind, n: u32, grid: &[f64], b: f64, c: f64) -> Result<Vec<FamilySpec>, Failure> {
    let mut out = Vec::new();
    for &a in grid {
        out.push(match kind {
            Kind::First => FamilySpec::first_kind(n, a)?,
            Kind::Second => FamilySpec::second_kind(n, a)?,
            Kind::Variant => FamilySpec::maillot_variant(),
            Kind::Triangle => FamilySpec::maillot_general(a, b, c)?,
        });
        if kind == Kind::Variant {
            break;
        }
    }
    Ok(out)
}

fn finish(records: &[VerificationRecord], out: &Output) -> Result<i32, Failure> {
    emit_report(records, out.format, out.out.as_deref()).map_err(|e| internal(format!("cannot write report: {e}")))?;
    let failed = records.iter().filter(|r| !r.pass).count();
    eprintln!("{} of {} cases passed", records.len() - failed, records.len());
    Ok(if failed == 0 { EXIT_PASS } else { EXIT_FAIL })
}

fn run_config(numeric: Option<&NumericOpts>) -> RunConfig {
    match numeric {
        Some(n) => RunConfig {
            method: n.method.name().into(),
            seed: n.seed,
            points: if n.method == Method::Quad { 0 } else { SAMPLE_POINTS },
        },
        None => RunConfig {
            method: "closed-form".into(),
            seed: 0,
            points: 0,
        },
    }
}

fn value_json(v: &ValueWithError) -> String {
    serde_json::json!({ "re": v.re(), "im": v.im(), "abs_error": v.abs_error }).to_string()
}

fn run_eval(e: &Eval) -> Result<String, Failure> {
    let v = match e {
        Eval::Li { index, args } => {
            let idx = MultiIndex::new(index)?;
            let xs = args.iter().map(|s| parse_complex(s)).collect::<Result<Vec<_>, _>>()?;
            li_auto(&idx, &xs)?
        }
        Eval::Hyperlog { poles, endpoint, branch } => {
            let ps = poles.iter().map(|s| parse_complex(s)).collect::<Result<Vec<_>, _>>()?;
            let end = parse_complex(endpoint)?;
            let word = HyperlogWord::new(ps)?;
            let b = match branch {
                Branch::Auto => default_branch(word.poles(), end),
                Branch::Real => BranchChoice::RealSegment,
                Branch::Lower => BranchChoice::LowerSemicircle,
                Branch::Upper => BranchChoice::UpperSemicircle,
            };
            eval_hyperlog(&word, end, &b)?
        }
        Eval::ScriptL { a, r, s, x, y, weighted } => {
            let x = parse_complex(x)?;
            let y = parse_complex(y)?;
            match (s, weighted) {
                (None, false) => script_l_r(*a, *r, x)?,
                (None, true) => script_l_r1(*a, *r, x)?,
                (Some(s), false) => script_l_rs(*a, *r, *s, x, y)?,
                (Some(s), true) => script_l_rs1(*a, *r, *s, x, y)?,
            }
        }
        Eval::LSeries { chars, exps } => {
            let cs = chars
                .iter()
                .map(|c| CharacterSpec::parse(c).ok_or_else(|| usage(format!("unknown character '{c}' (chi0, chi4sq, chi4)"))))
                .collect::<Result<Vec<_>, _>>()?;
            match (cs.as_slice(), exps.as_slice()) {
                // Depth one also covers the conditionally convergent L(χ₋₄, 1).
                ([chi], [e]) => l_single(*chi, *e)?,
                _ => l_multi(&MultiLSpec::new(&cs, exps)?)?,
            }
        }
    };
    Ok(value_json(&v))
}

/// Executes a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, Failure> {
    let threads = thread_count();
    match cli.command {
        Command::Verify(Verify::Family {
            kind,
            n,
            a,
            a_grid,
            b,
            c,
            numeric,
            out,
        }) => {
            let grid = match (a, a_grid) {
                (Some(a), None) => vec![a],
                (None, Some(g)) => parse_grid(&g)?,
                (None, None) if kind == Kind::Variant => vec![1.0],
                _ => return Err(usage("give --a or --a-grid")),
            };
            let fams = family_specs(kind, n, &grid, b, c)?;
            let cases = family_cases(fams, numeric.method, numeric.tol, numeric.seed);
            let records = run_cases(cases, &run_config(Some(&numeric)), threads)?;
            finish(&records, &out)
        }
        Command::Verify(Verify::Identities { suite, tol, out }) => {
            let cases = identity_cases(suite.as_deref(), tol).map_err(usage)?;
            let records = run_cases(cases, &run_config(None), threads)?;
            finish(&records, &out)
        }
        Command::Verify(Verify::TableA1 { numeric, out }) => {
            let cases = table_cases(numeric.method, numeric.tol, numeric.seed)?;
            let records = run_cases(cases, &run_config(Some(&numeric)), threads)?;
            finish(&records, &out)
        }
        Command::Eval(e) => {
            println!("{}", run_eval(&e)?);
            Ok(EXIT_PASS)
        }
        Command::Report { input, out } => {
            let text = std::fs::read(&input).map_err(|e| internal(format!("cannot read {}: {e}", input.display())))?;
            let records: Vec<VerificationRecord> =
                serde_json::from_slice(&text).map_err(|e| usage(format!("{} is not a JSON report: {e}", input.display())))?;
            finish(&records, &out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("0, -1.5").unwrap(), Complex64::new(0.0, -1.5));
        assert_eq!(parse_complex("x").unwrap_err().code, EXIT_USAGE);
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("0.1:0.5:0.1").unwrap(), vec![0.1, 0.2, 0.3, 0.4, 0.5]);
        assert_eq!(parse_grid("2:2:1").unwrap(), vec![2.0]);
        assert!(parse_grid("1:0.5:0.1").is_err());
        assert!(parse_grid("0:1:0.1").is_err());
        assert!(parse_grid("1:2").is_err());
    }
}
