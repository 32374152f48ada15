//! Numerical Mahler measures of the polynomial families, independent of the
//! polylogarithm formulas: Jensen reduction of one linear variable, then
//! nested Gauss–Legendre, quasi-Monte Carlo or Monte Carlo over the rest.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::qmc::{seeded_rng, unit_f64, KroneckerSequence};
use crate::numerics::quadrature::{gauss_legendre, graded_breakpoints, GaussLegendre};
use crate::numerics::{pairwise_sum, try_integrate_1d, QuadMethod, QuadOptions, QuadratureConfig, ValueWithError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyKind {
    /// (1+w₁)…(1+w_n) + a(1−w₁)…(1−w_n) y, n = 0..3.
    FirstKind,
    /// (1+w₁)…(1+w_n)(1+x) + a(1−w₁)…(1−w_n)(y+z), n = 0..2.
    SecondKind,
    /// (1+w)(1+y) + (1−w)(x−y).
    MaillotVariant,
    /// a + b x + c y.
    MaillotGeneral { a: f64, b: f64, c: f64 },
    /// 1 + αx + (1−α)y.
    MaillotSpecial { alpha: Complex64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: u32,
    pub a: f64,
}

impl FamilySpec {
    pub fn first_kind(n: u32, a: f64) -> Result<Self> {
        FamilySpec {
            kind: FamilyKind::FirstKind,
            n,
            a,
        }
        .validated()
    }

    pub fn second_kind(n: u32, a: f64) -> Result<Self> {
        FamilySpec {
            kind: FamilyKind::SecondKind,
            n,
            a,
        }
        .validated()
    }

    pub fn maillot_variant() -> Self {
        FamilySpec {
            kind: FamilyKind::MaillotVariant,
            n: 0,
            a: 1.0,
        }
    }

    pub fn maillot_general(a: f64, b: f64, c: f64) -> Result<Self> {
        FamilySpec {
            kind: FamilyKind::MaillotGeneral { a, b, c },
            n: 0,
            a: 1.0,
        }
        .validated()
    }

    pub fn maillot_special(alpha: Complex64) -> Result<Self> {
        FamilySpec {
            kind: FamilyKind::MaillotSpecial { alpha },
            n: 0,
            a: alpha.norm(),
        }
        .validated()
    }

    fn validated(self) -> Result<Self> {
        let pos = |x: f64| x.is_finite() && x > 0.0;
        match self.kind {
            FamilyKind::FirstKind if self.n > 3 => Err(Error::domain("first kind needs n in 0..=3")),
            FamilyKind::SecondKind if self.n > 2 => Err(Error::domain("second kind needs n in 0..=2")),
            FamilyKind::FirstKind | FamilyKind::SecondKind if !pos(self.a) => {
                Err(Error::domain(format!("parameter a = {} must be positive", self.a)))
            }
            FamilyKind::MaillotGeneral { a, b, c } if !(pos(a) && pos(b) && pos(c)) => {
                Err(Error::domain("Maillot coefficients must be positive"))
            }
            FamilyKind::MaillotSpecial { alpha }
                if !alpha.re.is_finite() || !alpha.im.is_finite() || alpha.norm() == 0.0 || (alpha - 1.0).norm() == 0.0 =>
            {
                Err(Error::domain("alpha must differ from 0 and 1"))
            }
            _ => Ok(self),
        }
    }

    /// Number of variables of the polynomial.
    pub fn variable_count(&self) -> usize {
        match self.kind {
            FamilyKind::FirstKind => self.n as usize + 1,
            FamilyKind::SecondKind => self.n as usize + 3,
            FamilyKind::MaillotVariant => 3,
            FamilyKind::MaillotGeneral { .. } | FamilyKind::MaillotSpecial { .. } => 2,
        }
    }

    /// Torus dimension left after eliminating one variable by Jensen.
    pub fn reduced_dimension(&self) -> usize {
        self.variable_count() - 1
    }

    /// Same family at parameter 1/a (first and second kind only).
    pub fn inverted(&self) -> Option<FamilySpec> {
        match self.kind {
            FamilyKind::FirstKind | FamilyKind::SecondKind => Some(FamilySpec {
                a: 1.0 / self.a,
                ..*self
            }),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self.kind {
            FamilyKind::FirstKind => format!("first_n{}", self.n),
            FamilyKind::SecondKind => format!("second_n{}", self.n),
            FamilyKind::MaillotVariant => "maillot_variant".into(),
            FamilyKind::MaillotGeneral { .. } => "maillot_general".into(),
            FamilyKind::MaillotSpecial { .. } => "maillot_special".into(),
        }
    }

    /// Default absolute tolerance for this family's reduced dimension.
    pub fn default_tolerance(&self) -> f64 {
        default_tolerance(self.reduced_dimension())
    }
}

pub fn default_tolerance(dimension: usize) -> f64 {
    match dimension {
        0 | 1 => 1e-8,
        2 => 1e-6,
        3 => 1e-4,
        _ => 5e-3,
    }
}

/// Integrand left after the Jensen step.
///
/// Quadrature does not work on the full torus: every angle enters through
/// |1 ± e^{iθ}| or through a rotation-invariant φ-average, so each angle is
/// folded onto a half period. The folded box, its normalisation and the kink
/// locations are kept alongside the torus integrand.
#[derive(Debug, Clone, Copy)]
pub struct ReducedIntegrand {
    family: FamilySpec,
    /// Common factor applied to both Jensen coefficients.
    scale: f64,
}

fn ln2cos(u: f64) -> f64 {
    (2.0 * u.cos()).ln()
}

fn ln2sin(u: f64) -> f64 {
    (2.0 * u.sin()).ln()
}

/// log max(|ρ + e^{iφ}|, 1) for ρ ≥ 0.
fn log_max_shift(rho: f64, phi: f64) -> f64 {
    let m2 = rho * rho + 1.0 + 2.0 * rho * phi.cos();
    if m2 > 1.0 {
        0.5 * m2.ln()
    } else {
        0.0
    }
}

impl ReducedIntegrand {
    pub fn dimension(&self) -> usize {
        self.family.reduced_dimension()
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    /// Multiplies both arguments of the Jensen maximum by `c > 0`.
    pub fn scaled(self, c: f64) -> Self {
        ReducedIntegrand {
            scale: self.scale * c,
            ..self
        }
    }

    pub fn singular_locus(&self) -> &'static str {
        match self.family.kind {
            FamilyKind::FirstKind => "θᵢ = π and θⱼ = 0 for some i ≠ j (both coefficients vanish)",
            FamilyKind::SecondKind => "θᵢ = π or θₓ = π together with θⱼ = 0 and φ opposite",
            FamilyKind::MaillotVariant => "θ_w = 0 with φ = π",
            FamilyKind::MaillotGeneral { .. } | FamilyKind::MaillotSpecial { .. } => "none (log max stays bounded)",
        }
    }

    /// Value at torus angles θ ∈ [0, 2π)^d.
    pub fn evaluate(&self, theta: &[f64]) -> f64 {
        let ln_s = self.scale.ln();
        let e = |t: f64| Complex64::from_polar(1.0, t);
        let fam = &self.family;
        match fam.kind {
            FamilyKind::FirstKind => {
                let la: f64 = theta.iter().map(|t| (e(*t) + 1.0).norm().ln()).sum();
                let lb: f64 = fam.a.ln() + theta.iter().map(|t| (1.0 - e(*t)).norm().ln()).sum::<f64>();
                ln_s + la.max(lb)
            }
            FamilyKind::SecondKind => {
                let n = fam.n as usize;
                let mut a0 = Complex64::new(1.0, 0.0);
                let mut b = Complex64::new(fam.a, 0.0);
                for t in &theta[..n] {
                    a0 *= 1.0 + e(*t);
                    b *= 1.0 - e(*t);
                }
                let c = a0 * (1.0 + e(theta[n])) + b * e(theta[n + 1]);
                ln_s + c.norm().ln().max(b.norm().ln())
            }
            FamilyKind::MaillotVariant => {
                let (w, y) = (e(theta[0]), e(theta[1]));
                let a = (1.0 + w) * (1.0 + y) - (1.0 - w) * y;
                ln_s + a.norm().ln().max((1.0 - w).norm().ln())
            }
            FamilyKind::MaillotGeneral { .. } | FamilyKind::MaillotSpecial { .. } => {
                let (a, b, c) = self.triangle();
                ln_s + (a + b * e(theta[0])).norm().ln().max(c.ln())
            }
        }
    }

    /// (|a|, |b|, |c|) of the equivalent a + b x + c y.
    fn triangle(&self) -> (f64, f64, f64) {
        match self.family.kind {
            FamilyKind::MaillotGeneral { a, b, c } => (a, b, c),
            FamilyKind::MaillotSpecial { alpha } => (1.0, alpha.norm(), (1.0 - alpha).norm()),
            _ => unreachable!("triangle() on a non-Maillot family"),
        }
    }

    fn bounds(&self) -> Vec<(f64, f64)> {
        let d = self.dimension();
        match self.family.kind {
            FamilyKind::FirstKind => vec![(0.0, FRAC_PI_2); d],
            FamilyKind::SecondKind | FamilyKind::MaillotVariant => {
                let mut b = vec![(0.0, FRAC_PI_2); d - 1];
                b.push((0.0, PI));
                b
            }
            _ => vec![(0.0, PI)],
        }
    }

    /// The measure equals `norm · ∫_box eval_box`.
    fn norm(&self) -> f64 {
        self.bounds().iter().map(|(lo, hi)| 1.0 / (hi - lo)).product()
    }

    /// Integrand on the folded box.
    fn eval_box(&self, u: &[f64]) -> f64 {
        let ln_s = self.scale.ln();
        let fam = &self.family;
        match fam.kind {
            FamilyKind::FirstKind => {
                let la: f64 = u.iter().map(|t| ln2cos(*t)).sum();
                let lb: f64 = fam.a.ln() + u.iter().map(|t| ln2sin(*t)).sum::<f64>();
                ln_s + la.max(lb)
            }
            FamilyKind::SecondKind => {
                let n = fam.n as usize;
                let lc: f64 = u[..=n].iter().map(|t| ln2cos(*t)).sum();
                let lb: f64 = fam.a.ln() + u[..n].iter().map(|t| ln2sin(*t)).sum::<f64>();
                let phi = u[n + 1];
                let gap = lc - lb;
                if gap >= LN_2 {
                    // ρ ≥ 2: |ρ + e^{iφ}| ≥ 1 and log|B| + log ρ = log|C|.
                    let r = (-gap).exp();
                    let m2 = 1.0 + r * r + 2.0 * r * phi.cos();
                    ln_s + lc + 0.5 * m2.ln()
                } else {
                    ln_s + lb + log_max_shift(gap.exp(), phi)
                }
            }
            FamilyKind::MaillotVariant => {
                let (p, q) = (u[0].cos(), u[0].sin());
                let m2 = p * p + 1.0 + 2.0 * p * u[1].cos();
                ln_s + LN_2 + (0.5 * m2.ln()).max(q.ln())
            }
            _ => {
                let (a, b, c) = self.triangle();
                let m2 = a * a + b * b + 2.0 * a * b * u[0].cos();
                ln_s + (0.5 * m2.ln()).max(c.ln())
            }
        }
    }

    /// Kinks of the box integrand in variable `level`, given the earlier
    /// coordinates.
    fn breakpoints(&self, level: usize, prefix: &[f64]) -> Vec<f64> {
        let d = self.dimension();
        let fam = &self.family;
        let mut out = Vec::new();
        match fam.kind {
            FamilyKind::FirstKind if level + 1 == d => {
                // Π tan uᵢ = 1/a.
                let t: f64 = prefix.iter().map(|u| u.tan()).product();
                out.push((1.0 / (fam.a * t)).atan());
            }
            FamilyKind::SecondKind => {
                let n = fam.n as usize;
                if level == n {
                    // ρ = 2 cos v · R₀ crosses 2.
                    let lr: f64 = prefix.iter().map(|u| ln2cos(*u) - ln2sin(*u)).sum::<f64>() - fam.a.ln();
                    let r0 = lr.exp();
                    if r0 > 1.0 {
                        out.push((1.0 / r0).acos());
                    }
                } else if level == n + 1 {
                    let lc: f64 = prefix[..=n].iter().map(|t| ln2cos(*t)).sum();
                    let lb: f64 = fam.a.ln() + prefix[..n].iter().map(|t| ln2sin(*t)).sum::<f64>();
                    let rho = (lc - lb).exp();
                    if rho < 2.0 {
                        out.push((-rho / 2.0).acos());
                    }
                }
            }
            FamilyKind::MaillotVariant if level == 1 => {
                out.push((-prefix[0].cos()).acos());
            }
            FamilyKind::MaillotGeneral { .. } | FamilyKind::MaillotSpecial { .. } => {
                let (a, b, c) = self.triangle();
                let cs = (c * c - a * a - b * b) / (2.0 * a * b);
                if cs.abs() < 1.0 {
                    out.push(cs.acos());
                }
            }
            _ => {}
        }
        out
    }

    /// Whether variable `level` is graded toward its box ends.
    fn graded(&self, level: usize) -> bool {
        let d = self.dimension();
        match self.family.kind {
            FamilyKind::FirstKind => level + 1 < d,
            FamilyKind::SecondKind | FamilyKind::MaillotVariant => level + 1 < d,
            _ => false,
        }
    }
}

/// Eliminates the linear variable (y for the first kind, z for the second,
/// x for the Maillot variant and y for the Maillot triangles) by
/// m(A + B·t) = average of log max(|A|, |B|).
pub fn jensen_reduce(family: &FamilySpec) -> Result<ReducedIntegrand> {
    let family = family.validated()?;
    Ok(ReducedIntegrand { family, scale: 1.0 })
}

struct TensorRule<'a> {
    f: &'a ReducedIntegrand,
    bounds: Vec<(f64, f64)>,
    rule: std::sync::Arc<GaussLegendre>,
    levels: usize,
}

impl TensorRule<'_> {
    fn panels(&self, level: usize, prefix: &[f64]) -> Vec<f64> {
        let (lo, hi) = self.bounds[level];
        let mut pts = vec![lo, hi];
        pts.extend(
            self.f
                .breakpoints(level, prefix)
                .into_iter()
                .filter(|x| *x > lo && *x < hi),
        );
        pts.sort_by(|a, b| a.total_cmp(b));
        // Box ends are graded where the family needs it; kinks always are,
        // since a log singularity of one branch can sit just past the kink.
        let ends = self.f.graded(level);
        let mut out = Vec::new();
        let last = pts.len() - 2;
        for (i, w) in pts.windows(2).enumerate() {
            let to_lo = if i == 0 { ends } else { true };
            let to_hi = if i == last { ends } else { true };
            let g = graded_breakpoints(w[0], w[1], to_lo, to_hi, self.levels, 0.5);
            out.extend_from_slice(&g[..g.len() - 1]);
        }
        out.push(hi);
        out
    }

    fn integrate(&self, level: usize, x: &mut Vec<f64>) -> f64 {
        let pts = self.panels(level, x);
        let mut panel_sums = Vec::with_capacity(pts.len());
        for w in pts.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b <= a {
                continue;
            }
            let c = 0.5 * (a + b);
            let h = 0.5 * (b - a);
            let mut acc = 0.0;
            for (t, wt) in self.rule.nodes.iter().zip(&self.rule.weights) {
                x.push(c + h * t);
                let v = if level + 1 == self.bounds.len() {
                    self.f.eval_box(x)
                } else {
                    self.integrate(level + 1, x)
                };
                x.pop();
                acc += wt * v;
            }
            panel_sums.push(acc * h);
        }
        pairwise_sum(&panel_sums)
    }
}

fn tensor_estimate(f: &ReducedIntegrand, points: usize, levels: usize) -> f64 {
    let t = TensorRule {
        f,
        bounds: f.bounds(),
        rule: gauss_legendre(points),
        levels,
    };
    let mut x = Vec::with_capacity(f.dimension());
    f.norm() * t.integrate(0, &mut x)
}

/// Grading depth for a target tolerance.
fn grading_levels(tol: f64) -> usize {
    ((1.0 / tol.max(1e-16)).log2() / 2.0).ceil().clamp(4.0, 24.0) as usize + 2
}

/// Default configuration for a family: tensor Gauss–Legendre up to three
/// dimensions, QMC in four.
pub fn default_config(family: &FamilySpec) -> QuadratureConfig {
    let d = family.reduced_dimension();
    let tol = default_tolerance(d);
    match d {
        0..=2 => QuadratureConfig::new(QuadMethod::GaussLegendreTensor, 12, tol, 0),
        3 => QuadratureConfig::new(QuadMethod::GaussLegendreTensor, 8, tol, 0),
        _ => QuadratureConfig::new(QuadMethod::Qmc, 1 << 20, tol, 0),
    }
}

/// Measure of the family by the method in `config`. The error estimate
/// comes from point-count doubling (tensor rule, QMC) or the sample spread
/// (Monte Carlo); an estimate above `target_tol` is an error carrying the
/// best value.
pub fn mahler_quadrature(family: &FamilySpec, config: &QuadratureConfig) -> Result<ValueWithError> {
    integrate_reduced(&jensen_reduce(family)?, config)
}

/// [`mahler_quadrature`] for an already reduced (possibly scaled) integrand.
pub fn integrate_reduced(f: &ReducedIntegrand, config: &QuadratureConfig) -> Result<ValueWithError> {
    let d = f.dimension();
    if d > 4 {
        return Err(Error::domain(format!("reduced dimension {d} exceeds 4")));
    }
    let result = match config.method {
        QuadMethod::GaussLegendreTensor => tensor_quadrature(f, config.points.max(2), config.target_tol),
        QuadMethod::Qmc => qmc_quadrature(f, config.points.max(64), config.seed),
        QuadMethod::MonteCarlo => return monte_carlo_integrand(f, config.points, config.seed),
    }?;
    if result.abs_error > config.target_tol {
        return Err(Error::NonConvergence {
            what: format!("{} measure quadrature", f.family().label()),
            best: result,
        });
    }
    Ok(result)
}

fn tensor_quadrature(f: &ReducedIntegrand, points: usize, tol: f64) -> Result<ValueWithError> {
    if f.dimension() == 0 {
        return Ok(ValueWithError::real(f.eval_box(&[]), 0.0));
    }
    let levels = grading_levels(tol);
    let coarse = tensor_estimate(f, points, levels);
    let fine = tensor_estimate(f, 2 * points, levels);
    let err = (fine - coarse).abs() + 16.0 * f64::EPSILON * fine.abs().max(1.0);
    ValueWithError::checked(Complex64::new(fine, 0.0), err, "tensor quadrature")
}

/// Smooth periodising map of [0,1] onto itself and its derivative.
fn periodise(t: f64) -> (f64, f64) {
    let s = 2.0 * PI * t;
    (t - s.sin() / (2.0 * PI), 1.0 - s.cos())
}

fn qmc_quadrature(f: &ReducedIntegrand, points: usize, seed: u64) -> Result<ValueWithError> {
    let d = f.dimension();
    if d == 0 {
        return Ok(ValueWithError::real(f.eval_box(&[]), 0.0));
    }
    let bounds = f.bounds();
    let family = KroneckerSequence::shifted_family(d, 2, seed);
    let half = points / 2;
    let mut t = vec![0.0; d];
    let mut u = vec![0.0; d];
    let mut full = Vec::new();
    let mut halves = Vec::new();
    for seq in &family {
        let mut block = Vec::with_capacity(1024);
        let mut partial = Vec::new();
        let mut sum_half = None;
        for i in 0..points as u64 {
            seq.point(i, &mut t);
            let mut jac = 1.0;
            for k in 0..d {
                let (x, dx) = periodise(t[k]);
                let (lo, hi) = bounds[k];
                u[k] = lo + (hi - lo) * x;
                jac *= dx;
            }
            let v = if jac > 0.0 { f.eval_box(&u) * jac } else { 0.0 };
            block.push(if v.is_finite() { v } else { 0.0 });
            if block.len() == 1024 {
                partial.push(pairwise_sum(&block));
                block.clear();
            }
            if i + 1 == half as u64 {
                let mut p = partial.clone();
                p.push(pairwise_sum(&block));
                sum_half = Some(pairwise_sum(&p) / half as f64);
            }
        }
        partial.push(pairwise_sum(&block));
        full.push(pairwise_sum(&partial) / points as f64);
        halves.push(sum_half.unwrap_or(0.0));
    }
    let mean = 0.5 * (full[0] + full[1]);
    let spread = (full[0] - full[1]).abs();
    let doubling = 0.5 * ((full[0] - halves[0]).abs() + (full[1] - halves[1]).abs());
    // The box average times the box volume normalisation is the measure;
    // the periodising map has unit mean Jacobian.
    let err = spread.max(doubling);
    ValueWithError::checked(Complex64::new(mean, 0.0), err, "QMC quadrature")
}

fn monte_carlo_integrand(f: &ReducedIntegrand, samples: usize, seed: u64) -> Result<ValueWithError> {
    if samples < 1000 {
        return Err(Error::domain("Monte Carlo needs at least 1000 samples"));
    }
    let d = f.dimension();
    let mut rng = seeded_rng(seed);
    let mut theta = vec![0.0; d];
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 0..samples {
        for t in theta.iter_mut() {
            *t = 2.0 * PI * unit_f64(&mut rng);
        }
        let v = f.evaluate(&theta);
        let v = if v.is_finite() { v } else { 0.0 };
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    let var = m2 / (samples - 1) as f64;
    let err = 3.0 * var.max(0.0).sqrt() / (samples as f64).sqrt();
    ValueWithError::checked(Complex64::new(mean, 0.0), err, "Monte Carlo")
}

/// Plain Monte Carlo mean of the reduced integrand at uniform torus points;
/// the error is three standard errors.
pub fn mahler_monte_carlo(family: &FamilySpec, samples: usize, seed: u64) -> Result<ValueWithError> {
    monte_carlo_integrand(&jensen_reduce(family)?, samples, seed)
}

/// Measure of P̃ from the measure of P, given as F on (0, 1] and G on
/// [1, ∞):
/// (2/π)[∫₀¹ F(x)·a/(x²+a²) dx + ∫₀¹ G(1/x)·a/(a²x²+1) dx].
pub fn param_transform(
    f: impl Fn(f64) -> Result<f64>,
    g: impl Fn(f64) -> Result<f64>,
    a: f64,
    tol: f64,
) -> Result<ValueWithError> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::domain(format!("parameter a = {a} must be positive")));
    }
    let opts = QuadOptions {
        rel_tol: 0.0,
        ..QuadOptions::with_tol(tol / 4.0)
    }
    .singular_at(&[0.0, a.min(1.0)]);
    let first = try_integrate_1d(|x| Ok(f(x)? * a / (x * x + a * a)), 0.0, 1.0, &opts)?;
    let opts = QuadOptions::with_tol(tol / 4.0).singular_at(&[0.0, (1.0 / a).min(1.0)]);
    let second = try_integrate_1d(|x| Ok(g(1.0 / x)? * a / (a * a * x * x + 1.0)), 0.0, 1.0, &opts)?;
    let scale = 2.0 / PI;
    Ok(ValueWithError::real(
        scale * (first.value + second.value),
        scale * (first.abs_error + second.abs_error),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219_015;
    const ZETA3: f64 = 1.202_056_903_159_594_3;

    #[test]
    fn variable_counts() {
        assert_eq!(FamilySpec::first_kind(0, 1.0).unwrap().variable_count(), 1);
        assert_eq!(FamilySpec::first_kind(3, 1.0).unwrap().variable_count(), 4);
        assert_eq!(FamilySpec::second_kind(2, 1.0).unwrap().reduced_dimension(), 4);
        assert_eq!(FamilySpec::maillot_variant().reduced_dimension(), 2);
        assert!(FamilySpec::first_kind(4, 1.0).is_err());
        assert!(FamilySpec::second_kind(0, -1.0).is_err());
    }

    #[test]
    fn jensen_constant_case() {
        let f = FamilySpec::first_kind(0, 2.0).unwrap();
        let cfg = default_config(&f);
        assert_eq!(mahler_quadrature(&f, &cfg).unwrap().re(), LN_2);
        let f = FamilySpec::first_kind(0, 1.0).unwrap();
        assert_eq!(mahler_quadrature(&f, &cfg).unwrap().re(), 0.0);
    }

    #[test]
    fn folded_box_matches_torus() {
        // The folded integrand averages to the same value as the torus one.
        for fam in [
            FamilySpec::first_kind(2, 0.7).unwrap(),
            FamilySpec::second_kind(1, 1.3).unwrap(),
            FamilySpec::maillot_variant(),
        ] {
            let f = jensen_reduce(&fam).unwrap();
            let q = tensor_quadrature(&f, 10, 1e-4).unwrap();
            let mc = mahler_monte_carlo(&fam, 200_000, 11).unwrap();
            assert!((q.re() - mc.re()).abs() < mc.abs_error + q.abs_error, "{}: {} vs {}", fam.label(), q, mc);
        }
    }

    #[test]
    fn catalan_row() {
        let f = FamilySpec::first_kind(1, 1.0).unwrap();
        let v = mahler_quadrature(&f, &default_config(&f)).unwrap();
        assert!((v.re() - 2.0 * CATALAN / PI).abs() < 1e-10, "{v}");
    }

    #[test]
    fn zeta3_rows() {
        let f = FamilySpec::first_kind(2, 1.0).unwrap();
        let v = mahler_quadrature(&f, &default_config(&f)).unwrap();
        assert!((v.re() - 7.0 * ZETA3 / (PI * PI)).abs() < 1e-7, "{v}");
        let f = FamilySpec::second_kind(0, 1.0).unwrap();
        let v = mahler_quadrature(&f, &default_config(&f)).unwrap();
        assert!((v.re() - 3.5 * ZETA3 / (PI * PI)).abs() < 1e-7, "{v}");
        let f = FamilySpec::maillot_variant();
        let v = mahler_quadrature(&f, &default_config(&f)).unwrap();
        let want = (3.5 * ZETA3 + PI * PI / 2.0 * LN_2) / (PI * PI);
        assert!((v.re() - want).abs() < 1e-7, "{v} vs {want}");
    }

    #[test]
    fn param_transform_of_zero_and_log_plus() {
        let v = param_transform(|_| Ok(0.0), |_| Ok(0.0), 1.3, 1e-10).unwrap();
        assert_eq!(v.re(), 0.0);
        let v = param_transform(|_| Ok(0.0), |x: f64| Ok(x.ln()), 1.0, 1e-10).unwrap();
        assert!((v.re() - 2.0 * CATALAN / PI).abs() < 1e-9, "{v}");
    }
}
