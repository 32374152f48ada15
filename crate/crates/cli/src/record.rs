use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub case_id: String,
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub tol: f64,
    pub pass: bool,
    pub runtime_ms: u64,
    pub config_digest: String,
}

impl VerificationRecord {
    pub fn new(case_id: String, params: BTreeMap<String, f64>, lhs: f64, rhs: f64, tol: f64, runtime_ms: u64, config: &RunConfig) -> Self {
        let abs_err = (lhs - rhs).abs();
        let config_digest = config.digest(&case_id, &params, tol);
        VerificationRecord {
            case_id,
            params,
            lhs,
            rhs,
            abs_err,
            tol,
            pass: abs_err <= tol,
            runtime_ms,
            config_digest,
        }
    }
}

/// Settings that influence a record's numbers; hashed into `config_digest`.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub method: String,
    pub seed: u64,
    pub points: usize,
}

impl RunConfig {
    pub fn digest(&self, case_id: &str, params: &BTreeMap<String, f64>, tol: f64) -> String {
        #[derive(Serialize)]
        struct Key<'a> {
            case_id: &'a str,
            params: &'a BTreeMap<String, f64>,
            tol: f64,
            config: &'a RunConfig,
        }
        let json = serde_json::to_vec(&Key {
            case_id,
            params,
            tol,
            config: self,
        })
        .expect("digest key serializes");
        let hash = Sha256::digest(&json);
        hash.iter().take(12).fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

fn params_cell(params: &BTreeMap<String, f64>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub fn render(records: &[VerificationRecord], format: Format) -> std::io::Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(records)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["case_id", "params", "lhs", "rhs", "abs_err", "tol", "pass", "runtime_ms", "config_digest"])?;
            for r in records {
                w.write_record([
                    r.case_id.clone(),
                    params_cell(&r.params),
                    format!("{:e}", r.lhs),
                    format!("{:e}", r.rhs),
                    format!("{:e}", r.abs_err),
                    format!("{:e}", r.tol),
                    r.pass.to_string(),
                    r.runtime_ms.to_string(),
                    r.config_digest.clone(),
                ])?;
            }
            w.into_inner().map_err(|e| e.into_error())
        }
        Format::Md => {
            let mut s = String::from("| case | params | lhs | rhs | abs err | tol | pass | ms |\n|---|---|---|---|---|---|---|---|\n");
            for r in records {
                let _ = writeln!(
                    s,
                    "| {} | {} | {:.12} | {:.12} | {:.2e} | {:.0e} | {} | {} |",
                    r.case_id,
                    params_cell(&r.params),
                    r.lhs,
                    r.rhs,
                    r.abs_err,
                    r.tol,
                    if r.pass { "yes" } else { "NO" },
                    r.runtime_ms
                );
            }
            Ok(s.into_bytes())
        }
    }
}

/// Writes the rendered records to `out`, or stdout when `out` is None.
pub fn emit_report(records: &[VerificationRecord], format: Format, out: Option<&std::path::Path>) -> std::io::Result<()> {
    let bytes = render(records, format)?;
    match out {
        Some(path) => std::fs::write(path, bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&bytes)?;
            stdout.flush()
        }
    }
}
