use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use mahler_core::dirichlet::{l_single, CharacterSpec};
use mahler_core::formulas::{closed_form, identity_registry, row3_from_s1, row5_from_s2};
use mahler_core::mahler::{default_config, default_tolerance, mahler_quadrature, FamilySpec};
use mahler_core::numerics::{QuadMethod, QuadratureConfig};
use mahler_core::polylog::zeta;
use mahler_core::{Error, Result};

use crate::record::{RunConfig, VerificationRecord};

type Compute = Box<dyn Fn() -> Result<(f64, f64)> + Send + Sync>;

pub struct Case {
    pub id: String,
    pub params: BTreeMap<String, f64>,
    pub tol: f64,
    pub compute: Compute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Quad,
    Qmc,
    Mc,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Quad => "quad",
            Method::Qmc => "qmc",
            Method::Mc => "mc",
        }
    }
}

pub const SAMPLE_POINTS: usize = 1 << 20;

/// Numeric measure by `method`. An unconverged estimate is still returned:
/// the record compares it against `tol` and fails on its own.
pub fn numeric_measure(fam: &FamilySpec, method: Method, tol: f64, seed: u64) -> Result<f64> {
    let base = default_config(fam);
    let target = if tol > 0.0 { tol.min(base.target_tol) } else { base.target_tol };
    let cfg = match method {
        Method::Quad => QuadratureConfig {
            target_tol: target,
            seed,
            ..base
        },
        Method::Qmc => QuadratureConfig::new(QuadMethod::Qmc, SAMPLE_POINTS, target, seed),
        Method::Mc => QuadratureConfig::new(QuadMethod::MonteCarlo, SAMPLE_POINTS, target, seed),
    };
    match mahler_quadrature(fam, &cfg) {
        Ok(v) => Ok(v.re()),
        Err(Error::NonConvergence { best, .. }) => Ok(best.re()),
        Err(e) => Err(e),
    }
}

fn fmt_param(v: f64) -> String {
    format!("{v}")
}

pub fn family_cases(fams: Vec<FamilySpec>, method: Method, tol: Option<f64>, seed: u64) -> Vec<Case> {
    fams.into_iter()
        .map(|fam| {
            let tol = tol.unwrap_or_else(|| default_tolerance(fam.reduced_dimension()));
            let mut params = BTreeMap::from([("a".to_string(), fam.a), ("n".to_string(), fam.n as f64)]);
            if let mahler_core::mahler::FamilyKind::MaillotGeneral { b, c, .. } = fam.kind {
                params.insert("b".into(), b);
                params.insert("c".into(), c);
            }
            Case {
                id: format!("{}:a={}", fam.label(), fmt_param(fam.a)),
                params,
                tol,
                compute: Box::new(move || {
                    let lhs = numeric_measure(&fam, method, tol, seed)?;
                    let rhs = closed_form(&fam)?.re();
                    Ok((lhs, rhs))
                }),
            }
        })
        .collect()
}

/// Registry identities; `suite` filters by case id (None or "all" keeps all).
pub fn identity_cases(suite: Option<&str>, tol: Option<f64>) -> std::result::Result<Vec<Case>, String> {
    let wanted: Option<Vec<&str>> = suite.filter(|s| *s != "all").map(|s| s.split(',').collect());
    let registry = identity_registry();
    if let Some(w) = &wanted {
        for id in w {
            if !registry.iter().any(|c| c.id == *id) {
                let known: Vec<&str> = registry.iter().map(|c| c.id).collect();
                return Err(format!("unknown suite '{id}'; known: {}", known.join(", ")));
            }
        }
    }
    let mut out = Vec::new();
    for case in registry {
        if let Some(w) = &wanted {
            if !w.contains(&case.id) {
                continue;
            }
        }
        let grid = !case.param_grid.is_empty();
        for a in case.params() {
            let c = case.clone();
            let (id, params) = if grid {
                (format!("{}:a={}", c.id, fmt_param(a)), BTreeMap::from([("a".to_string(), a)]))
            } else {
                (c.id.to_string(), BTreeMap::new())
            };
            out.push(Case {
                id,
                params,
                tol: tol.unwrap_or(1e-8),
                compute: Box::new(move || {
                    let (l, r, _) = c.residual(a)?;
                    Ok((l.value.re, r.value.re))
                }),
            });
        }
    }
    Ok(out)
}

/// The seven a = 1 table rows: numeric measure against the tabulated value.
pub fn table_cases(method: Method, tol: Option<f64>, seed: u64) -> Result<Vec<Case>> {
    type Rhs = fn() -> Result<f64>;
    let rows: [(&str, FamilySpec, Rhs); 7] = [
        ("row1", FamilySpec::first_kind(1, 1.0)?, || Ok(2.0 * l_single(CharacterSpec::ChiMinus4, 2)?.re() / PI)),
        ("row2", FamilySpec::first_kind(2, 1.0)?, || Ok(7.0 * zeta(3)? / (PI * PI))),
        ("row3", FamilySpec::first_kind(3, 1.0)?, || Ok(row3_from_s1()?.re())),
        ("row4", FamilySpec::second_kind(0, 1.0)?, || Ok(3.5 * zeta(3)? / (PI * PI))),
        ("row5", FamilySpec::second_kind(1, 1.0)?, || Ok(row5_from_s2()?.re())),
        ("row6", FamilySpec::second_kind(2, 1.0)?, || Ok(93.0 * zeta(5)? / PI.powi(4))),
        ("row7", FamilySpec::maillot_variant(), || Ok((3.5 * zeta(3)? + PI * PI / 2.0 * LN_2) / (PI * PI))),
    ];
    Ok(rows
        .into_iter()
        .map(|(row, fam, rhs)| {
            let tol = tol.unwrap_or_else(|| default_tolerance(fam.reduced_dimension()));
            Case {
                id: format!("{row}:{}", fam.label()),
                params: BTreeMap::from([("a".to_string(), 1.0)]),
                tol,
                compute: Box::new(move || Ok((numeric_measure(&fam, method, tol, seed)?, rhs()?))),
            }
        })
        .collect())
}

/// Thread count from MAHLER_THREADS, default 1.
pub fn thread_count() -> usize {
    std::env::var("MAHLER_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(1)
}

/// Runs the cases on `threads` workers; records come back sorted by case id.
pub fn run_cases(cases: Vec<Case>, config: &RunConfig, threads: usize) -> Result<Vec<VerificationRecord>> {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Result<VerificationRecord>>> = Mutex::new(Vec::with_capacity(cases.len()));
    std::thread::scope(|s| {
        for _ in 0..threads.max(1).min(cases.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(case) = cases.get(i) else { break };
                let t = Instant::now();
                let r = (case.compute)().map(|(lhs, rhs)| {
                    let ms = t.elapsed().as_millis() as u64;
                    VerificationRecord::new(case.id.clone(), case.params.clone(), lhs, rhs, case.tol, ms, config)
                });
                results.lock().expect("results lock").push(r);
            });
        }
    });
    let mut records = results.into_inner().expect("results lock").into_iter().collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    Ok(records)
}
