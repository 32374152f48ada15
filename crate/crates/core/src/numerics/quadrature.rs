//! One-dimensional quadrature: Gauss–Legendre rules, composite rules on
//! graded panels, and an adaptive Gauss–Kronrod (7/15) integrator with
//! declared singular points.

use std::collections::{BinaryHeap, HashMap};
use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::ValueWithError;

/// Values that can be integrated: reals and complex numbers.
pub trait QuadValue:
    Copy + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn magnitude(&self) -> f64;
    fn to_complex(&self) -> Complex64;
}

impl QuadValue for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl QuadValue for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// Gauss–Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integrates `f` over [a, b].
    pub fn integrate<T: QuadValue>(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> T) -> T {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let mut acc = T::default();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc = acc + f(c + h * x) * *w;
        }
        acc * h
    }

    pub fn try_integrate<T: QuadValue>(
        &self,
        a: f64,
        b: f64,
        mut f: impl FnMut(f64) -> Result<T>,
    ) -> Result<T> {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let mut acc = T::default();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc = acc + f(c + h * x)? * *w;
        }
        Ok(acc * h)
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

/// Shared cache of Gauss–Legendre rules.
pub fn gauss_legendre(n: usize) -> Arc<GaussLegendre> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussLegendre>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(GaussLegendre::new(n)))
        .clone()
}

/// Breakpoints on [lo, hi] refined geometrically toward the flagged ends:
/// `lo + (hi - lo)/2 * ratio^k`, k = 0..levels, and the mirror image at `hi`.
pub fn graded_breakpoints(
    lo: f64,
    hi: f64,
    toward_lo: bool,
    toward_hi: bool,
    levels: usize,
    ratio: f64,
) -> Vec<f64> {
    let mut pts = vec![lo, hi];
    let half = 0.5 * (hi - lo);
    if toward_lo || toward_hi {
        pts.push(lo + half);
    }
    let mut r = 1.0;
    for _ in 0..levels {
        r *= ratio;
        if toward_lo {
            pts.push(lo + half * r);
        }
        if toward_hi {
            pts.push(hi - half * r);
        }
    }
    sort_dedup(&mut pts);
    pts
}

pub(crate) fn sort_dedup(pts: &mut Vec<f64>) {
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * (1.0 + a.abs()));
}

/// Composite Gauss–Legendre over consecutive panels `[p_i, p_{i+1}]`.
pub fn composite_gauss_legendre<T: QuadValue>(
    breakpoints: &[f64],
    points_per_panel: usize,
    mut f: impl FnMut(f64) -> T,
) -> T {
    let rule = gauss_legendre(points_per_panel);
    let mut acc = T::default();
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            acc = acc + rule.integrate(w[0], w[1], &mut f);
        }
    }
    acc
}

// Kronrod 15-point abscissae and weights with the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn kronrod15<T: QuadValue>(
    a: f64,
    b: f64,
    f: &mut impl FnMut(f64) -> Result<T>,
) -> Result<(T, f64)> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = fc.magnitude() * WGK[7];
    let mut f1 = [T::default(); 7];
    let mut f2 = [T::default(); 7];
    for j in 0..7 {
        let x = h * XGK[j];
        let v1 = f(c - x)?;
        let v2 = f(c + x)?;
        f1[j] = v1;
        f2[j] = v2;
        res_k = res_k + (v1 + v2) * WGK[j];
        res_abs += WGK[j] * (v1.magnitude() + v2.magnitude());
        if j % 2 == 1 {
            res_g = res_g + (v1 + v2) * WG[j / 2];
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).magnitude();
    for j in 0..7 {
        res_asc += WGK[j] * ((f1[j] - mean).magnitude() + (f2[j] - mean).magnitude());
    }
    if !res_k.magnitude().is_finite() {
        return Err(Error::NonFinite(format!("integrand on [{a}, {b}]")));
    }
    let habs = h.abs();
    let result = res_k * h;
    res_abs *= habs;
    res_asc *= habs;
    let mut err = ((res_k - res_g) * h).magnitude();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok((result, err))
}

/// Options for [`integrate_1d`].
#[derive(Debug, Clone)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Abscissae where the integrand is singular or non-smooth. The initial
    /// mesh is graded geometrically toward each of them.
    pub singularities: Vec<f64>,
    pub grading_levels: usize,
    pub grading_ratio: f64,
}

impl QuadOptions {
    pub fn with_tol(abs_tol: f64) -> Self {
        QuadOptions {
            abs_tol,
            ..QuadOptions::default()
        }
    }

    pub fn singular_at(mut self, points: &[f64]) -> Self {
        self.singularities.extend_from_slice(points);
        self
    }
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: 1e-10,
            rel_tol: 0.0,
            max_subdivisions: 2000,
            singularities: Vec::new(),
            grading_levels: 8,
            grading_ratio: 0.5,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult<T> {
    pub value: T,
    pub abs_error: f64,
    pub evaluations: usize,
}

impl<T: QuadValue> QuadResult<T> {
    pub fn to_value(&self) -> ValueWithError {
        ValueWithError::new(self.value.to_complex(), self.abs_error)
    }
}

/// Adaptive Gauss–Kronrod integration of an infallible integrand.
pub fn integrate_1d<T: QuadValue>(
    mut f: impl FnMut(f64) -> T,
    a: f64,
    b: f64,
    opts: &QuadOptions,
) -> Result<QuadResult<T>> {
    try_integrate_1d(|x| Ok(f(x)), a, b, opts)
}

/// Adaptive Gauss–Kronrod integration; errors from the integrand abort the
/// integration and are returned unchanged.
pub fn try_integrate_1d<T: QuadValue>(
    mut f: impl FnMut(f64) -> Result<T>,
    a: f64,
    b: f64,
    opts: &QuadOptions,
) -> Result<QuadResult<T>> {
    if a == b {
        return Ok(QuadResult {
            value: T::default(),
            abs_error: 0.0,
            evaluations: 0,
        });
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };

    let mut pts = vec![lo, hi];
    let mut sing: Vec<f64> = opts
        .singularities
        .iter()
        .copied()
        .filter(|s| *s >= lo && *s <= hi)
        .collect();
    sort_dedup(&mut sing);
    pts.extend(sing.iter().copied());
    sort_dedup(&mut pts);
    let coarse = pts.clone();
    for w in coarse.windows(2) {
        let (l, r) = (w[0], w[1]);
        let at_l = sing.iter().any(|s| (*s - l).abs() <= 1e-15 * (1.0 + l.abs()));
        let at_r = sing.iter().any(|s| (*s - r).abs() <= 1e-15 * (1.0 + r.abs()));
        pts.extend(graded_breakpoints(
            l,
            r,
            at_l,
            at_r,
            opts.grading_levels,
            opts.grading_ratio,
        ));
    }
    sort_dedup(&mut pts);

    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    for w in pts.windows(2) {
        let (value, error) = kronrod15(w[0], w[1], &mut f)?;
        evaluations += 15;
        heap.push(Panel {
            a: w[0],
            b: w[1],
            value,
            error,
        });
    }

    let total = |heap: &BinaryHeap<Panel<T>>| -> (T, f64) {
        let mut v = T::default();
        let mut e = 0.0;
        // Sum in interval order so the result does not depend on heap layout.
        let mut panels: Vec<&Panel<T>> = heap.iter().collect();
        panels.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap_or(Ordering::Equal));
        for p in panels {
            v = v + p.value;
            e += p.error;
        }
        (v, e)
    };

    let mut subdivisions = heap.len();
    loop {
        let (value, error) = total(&heap);
        let target = opts.abs_tol.max(opts.rel_tol * value.magnitude());
        if error <= target {
            return Ok(QuadResult {
                value: value * sign,
                abs_error: error,
                evaluations,
            });
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => unreachable!("heap always holds at least one panel"),
        };
        let mid = 0.5 * (worst.a + worst.b);
        let too_small = mid <= worst.a || mid >= worst.b;
        if subdivisions >= opts.max_subdivisions || too_small {
            heap.push(worst);
            let (value, error) = total(&heap);
            return Err(Error::NonConvergence {
                what: "adaptive quadrature".into(),
                best: ValueWithError::new((value * sign).to_complex(), error),
            });
        }
        let (v1, e1) = kronrod15(worst.a, mid, &mut f)?;
        let (v2, e2) = kronrod15(mid, worst.b, &mut f)?;
        evaluations += 30;
        subdivisions += 1;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn kronrod_weights_are_normalised() {
        let s: f64 = 2.0 * WGK[..7].iter().sum::<f64>() + WGK[7];
        assert!((s - 2.0).abs() < 1e-15);
        let g: f64 = 2.0 * WG[..3].iter().sum::<f64>() + WG[3];
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn kronrod_exact_for_degree_22() {
        let mut f = |x: f64| Ok::<f64, Error>(x.powi(22) + 3.0 * x.powi(7) - x * x);
        let (v, _) = kronrod15(-1.0, 1.0, &mut f).unwrap();
        let exact = 2.0 / 23.0 - 2.0 / 3.0;
        assert!((v - exact).abs() < 1e-14);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        for n in [1usize, 2, 5, 10, 33] {
            let rule = GaussLegendre::new(n);
            let deg = 2 * n - 1;
            let v = rule.integrate(0.0, 1.0, |x: f64| x.powi(deg as i32));
            assert!((v - 1.0 / (deg as f64 + 1.0)).abs() < 1e-14, "n = {n}");
            let w: f64 = rule.weights.iter().sum();
            assert!((w - 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn log_endpoint_singularity() {
        let opts = QuadOptions::with_tol(1e-13).singular_at(&[0.0]);
        let r = integrate_1d(|x: f64| -x.ln(), 0.0, 1.0, &opts).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn log_sine_integral_vanishes() {
        let opts = QuadOptions::with_tol(1e-12).singular_at(&[0.0, PI]);
        let r = integrate_1d(|t: f64| (2.0 * t.sin()).abs().ln(), 0.0, PI, &opts).unwrap();
        assert!(r.value.abs() < 1e-11, "{}", r.value);
    }

    #[test]
    fn reversed_interval_flips_sign() {
        let opts = QuadOptions::with_tol(1e-13);
        let r = integrate_1d(|x: f64| x.exp(), 1.0, 0.0, &opts).unwrap();
        assert!((r.value + (1f64.exp() - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn non_convergence_carries_estimate() {
        let opts = QuadOptions {
            abs_tol: 1e-15,
            max_subdivisions: 3,
            grading_levels: 0,
            ..QuadOptions::default()
        };
        let err = integrate_1d(|x: f64| (50.0 * x).sin().abs(), 0.0, 3.0, &opts).unwrap_err();
        match err {
            Error::NonConvergence { best, .. } => assert!(best.re() > 0.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn complex_integrand() {
        let opts = QuadOptions::with_tol(1e-13);
        let r = integrate_1d(
            |t: f64| Complex64::new(0.0, t).exp(),
            0.0,
            PI,
            &opts,
        )
        .unwrap();
        assert!((r.value - Complex64::new(0.0, 2.0)).norm() < 1e-13);
    }

    #[test]
    fn graded_breakpoints_shape() {
        let p = graded_breakpoints(0.0, 1.0, true, false, 3, 0.5);
        assert_eq!(p, vec![0.0, 0.0625, 0.125, 0.25, 0.5, 1.0]);
    }
}
