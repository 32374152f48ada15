//! Iterated integrals along paths as a triangular linear ODE system:
//! h_0 = 1, h_j(start) = 0 and dh_j = h_{j-1} dz / (z - b_j).
//!
//! The system is integrated with the Dormand–Prince 5(4) pair. Poles sitting
//! exactly at the start of the path are handled with a power-series start;
//! poles at the end are handled by splitting the path and integrating the
//! second half backwards.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::path::{IntegrationPath, Segment};
use crate::numerics::ValueWithError;

#[derive(Debug, Clone)]
pub struct OdeOptions {
    /// Absolute and relative local error target per accepted step.
    pub local_tol: f64,
    pub max_steps: usize,
    /// Minimum pole distance from the path, as a fraction of path length.
    pub clearance_rel: f64,
    /// Number of power-series terms used near a pole at the start point.
    pub taylor_terms: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            local_tol: 1e-13,
            max_steps: 200_000,
            clearance_rel: 1e-3,
            taylor_terms: 80,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OdeSolution {
    /// h_1, ..., h_w at the end of the path.
    pub values: Vec<Complex64>,
    /// Accumulated error estimate for each component.
    pub abs_errors: Vec<f64>,
    pub steps: usize,
}

/// Integrates the system and returns h_1..h_w at the end of the path.
/// Poles must clear the path; a pole at the start point is allowed for
/// every letter except the first.
pub fn ode_along_path(
    path: &IntegrationPath,
    poles: &[Complex64],
    local_tol: f64,
) -> Result<Vec<Complex64>> {
    let opts = OdeOptions {
        local_tol,
        ..OdeOptions::default()
    };
    solve_iterated(path, poles, &opts).map(|s| s.values)
}

fn coincides(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-13 * (1.0 + a.norm())
}

/// A pole close to a path end point that the path leaves at a clear angle;
/// the stepper resolves these with small steps.
pub(crate) fn beside_end(b: Complex64, point: Complex64, distance: f64) -> bool {
    let r = (b - point).norm();
    r > 0.0 && distance >= 0.5 * r
}

fn check_clearance(
    path: &IntegrationPath,
    poles: &[Complex64],
    opts: &OdeOptions,
    allow_end: bool,
) -> Result<()> {
    let clearance = opts.clearance_rel * path.length();
    let (start, end) = (path.start(), path.end());
    for (i, &b) in poles.iter().enumerate() {
        if !(b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::domain(format!("pole #{} is not finite", i + 1)));
        }
        if coincides(b, start) || (allow_end && coincides(b, end)) {
            continue;
        }
        let d = path.distance_to(b);
        if d < clearance && !beside_end(b, start, d) && !beside_end(b, end, d) {
            return Err(Error::PoleOnPath {
                index: i + 1,
                pole: b,
                distance: d,
                clearance,
                hint: "deform the path (e.g. a semicircle on the other side)".into(),
            });
        }
    }
    if let Some(&b1) = poles.first() {
        if coincides(b1, start) {
            return Err(Error::Divergent(
                "first letter of the word coincides with the path start".into(),
            ));
        }
    }
    Ok(())
}

/// All prefix integrals h_1..h_w along `path`. Poles at the end point are
/// rejected; use [`iterated_integral`] for those.
pub fn solve_iterated(
    path: &IntegrationPath,
    poles: &[Complex64],
    opts: &OdeOptions,
) -> Result<OdeSolution> {
    check_clearance(path, poles, opts, false)?;
    integrate_checked(path, poles, opts)
}

/// The full-word integral h_w along `path`, allowing poles at the end point
/// as long as the last letter is not one of them.
pub fn iterated_integral(
    path: &IntegrationPath,
    poles: &[Complex64],
    opts: &OdeOptions,
) -> Result<ValueWithError> {
    let w = poles.len();
    if w == 0 {
        return Ok(ValueWithError::exact(Complex64::new(1.0, 0.0)));
    }
    check_clearance(path, poles, opts, true)?;
    let end = path.end();
    if !poles.iter().any(|&b| coincides(b, end)) {
        let sol = integrate_checked(path, poles, opts)?;
        return ValueWithError::checked(sol.values[w - 1], sol.abs_errors[w - 1], "iterated integral");
    }
    if coincides(poles[w - 1], end) {
        return Err(Error::Divergent(
            "last letter of the word coincides with the path end".into(),
        ));
    }
    // Chen split at the midpoint. The second half is integrated backwards
    // with the reversed word, which turns the end pole into a start pole.
    let (first, second) = path.split_at_fraction(0.5);
    let fwd = integrate_checked(&first, poles, opts)?;
    let rev_poles: Vec<Complex64> = poles.iter().rev().copied().collect();
    let back = integrate_checked(&second.reversed(), &rev_poles, opts)?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for k in 0..=w {
        let (fk, fk_err) = if k == 0 {
            (Complex64::new(1.0, 0.0), 0.0)
        } else {
            (fwd.values[k - 1], fwd.abs_errors[k - 1])
        };
        let r = w - k;
        let (gk, gk_err) = if r == 0 {
            (Complex64::new(1.0, 0.0), 0.0)
        } else {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            (back.values[r - 1] * sign, back.abs_errors[r - 1])
        };
        value += fk * gk;
        err += fk.norm() * gk_err + gk.norm() * fk_err + fk_err * gk_err;
    }
    ValueWithError::checked(value, err, "iterated integral")
}

fn integrate_checked(
    path: &IntegrationPath,
    poles: &[Complex64],
    opts: &OdeOptions,
) -> Result<OdeSolution> {
    let w = poles.len();
    let start = path.start();
    let segments = path.segments();
    let mut y = vec![Complex64::new(0.0, 0.0); w];
    let mut errs = vec![0.0; w];
    let mut t_first = 0.0;

    if poles.iter().any(|&b| coincides(b, start)) {
        let others = poles
            .iter()
            .filter(|&&b| !coincides(b, start))
            .map(|&b| (b - start).norm())
            .fold(f64::INFINITY, f64::min);
        let seg_len = segments[0].length();
        let radius = 0.5 * others.min(2.0 * seg_len);
        t_first = if seg_len > 0.0 {
            (radius / seg_len).min(1.0)
        } else {
            1.0
        };
        let u = segments[0].point(t_first) - start;
        let (vals, tail) = taylor_start(poles, start, u, opts.taylor_terms)?;
        y = vals;
        errs = tail;
    }

    let mut steps = 0usize;
    for (i, seg) in segments.iter().enumerate() {
        let t0 = if i == 0 { t_first } else { 0.0 };
        if t0 >= 1.0 {
            continue;
        }
        steps += dopri_segment(seg, poles, t0, &mut y, &mut errs, opts, steps)?;
    }
    let scale = y.iter().map(|v| v.norm()).fold(0.0, f64::max);
    for e in errs.iter_mut() {
        *e += (steps as f64).sqrt() * 4.0 * f64::EPSILON * (1.0 + scale);
    }
    for v in &y {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite("path ODE".into()));
        }
    }
    Ok(OdeSolution {
        values: y,
        abs_errors: errs,
        steps,
    })
}

/// Power series of h_1..h_w about `center` (a pole of some letters other
/// than the first), evaluated at `center + u`. Returns values and tail
/// estimates.
fn taylor_start(
    poles: &[Complex64],
    center: Complex64,
    u: Complex64,
    terms: usize,
) -> Result<(Vec<Complex64>, Vec<f64>)> {
    let zero = Complex64::new(0.0, 0.0);
    // The iterated integrals are invariant under z -> z/|u|; expanding in
    // the scaled variable keeps the coefficients bounded for nearby poles.
    let rho = if u.norm() > 0.0 { u.norm() } else { 1.0 };
    let u = u / rho;
    let mut prev = vec![zero; terms + 1];
    prev[0] = Complex64::new(1.0, 0.0);
    let mut values = Vec::with_capacity(poles.len());
    let mut tails = Vec::with_capacity(poles.len());
    for &b in poles {
        let beta = (b - center) / rho;
        let mut next = vec![zero; terms + 1];
        if coincides(b, center) {
            if prev[0].norm() != 0.0 {
                return Err(Error::Divergent("logarithmic pole at the path start".into()));
            }
            for k in 1..=terms {
                next[k] = prev[k] / k as f64;
            }
        } else {
            // q = h_{j-1} / (z - beta) = sum p_m z^m, then integrate termwise.
            let mut p_prev = zero;
            for m in 0..terms {
                let p = (p_prev - prev[m]) / beta;
                next[m + 1] = p / (m as f64 + 1.0);
                p_prev = p;
            }
        }
        let mut val = zero;
        let mut upow = Complex64::new(1.0, 0.0);
        let mut last = 0.0f64;
        for (k, c) in next.iter().enumerate() {
            let term = *c * upow;
            val += term;
            if k + 6 > terms {
                last = last.max(term.norm());
            }
            upow *= u;
        }
        values.push(val);
        tails.push(4.0 * last + 4.0 * f64::EPSILON * val.norm());
        prev = next;
    }
    Ok((values, tails))
}

const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

fn rhs(seg: &Segment, poles: &[Complex64], t: f64, y: &[Complex64], out: &mut [Complex64]) {
    let z = seg.point(t);
    let dz = seg.derivative(t);
    let mut prev = Complex64::new(1.0, 0.0);
    for (j, &b) in poles.iter().enumerate() {
        out[j] = prev * dz / (z - b);
        prev = y[j];
    }
}

fn dopri_segment(
    seg: &Segment,
    poles: &[Complex64],
    t_start: f64,
    y: &mut [Complex64],
    errs: &mut [f64],
    opts: &OdeOptions,
    steps_so_far: usize,
) -> Result<usize> {
    let w = poles.len();
    let zero = Complex64::new(0.0, 0.0);
    let mut k: Vec<Vec<Complex64>> = vec![vec![zero; w]; 7];
    let mut tmp = vec![zero; w];
    let mut y_new = vec![zero; w];
    let mut t = t_start;
    let mut h = (0.02f64).min(1.0 - t);
    let mut steps = 0usize;
    rhs(seg, poles, t, y, &mut k[0]);
    while t < 1.0 {
        if steps_so_far + steps >= opts.max_steps {
            return Err(Error::StepExplosion(opts.max_steps));
        }
        if t + h > 1.0 {
            h = 1.0 - t;
        }
        for s in 1..7 {
            for j in 0..w {
                let mut acc = zero;
                for (r, kr) in k.iter().enumerate().take(s) {
                    acc += kr[j] * A[s][r];
                }
                tmp[j] = y[j] + acc * h;
            }
            rhs(seg, poles, t + C[s] * h, &tmp, &mut k[s]);
            if s == 6 {
                y_new.copy_from_slice(&tmp);
            }
        }
        let mut err_norm = 0.0f64;
        let mut local = vec![0.0; w];
        for j in 0..w {
            let mut e = zero;
            for (r, kr) in k.iter().enumerate() {
                e += kr[j] * E[r];
            }
            let e = (e * h).norm();
            local[j] = e;
            let sc = opts.local_tol * (1.0 + y[j].norm().max(y_new[j].norm()));
            err_norm = err_norm.max(e / sc);
        }
        if !err_norm.is_finite() {
            return Err(Error::NonFinite("path ODE step".into()));
        }
        steps += 1;
        if err_norm <= 1.0 {
            t += h;
            y.copy_from_slice(&y_new);
            for j in 0..w {
                errs[j] += local[j];
            }
            let (first, rest) = k.split_at_mut(1);
            first[0].copy_from_slice(&rest[5]);
        }
        let factor = if err_norm == 0.0 {
            5.0
        } else {
            (0.9 * err_norm.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if h < 1e-14 {
            return Err(Error::StepExplosion(steps_so_far + steps));
        }
    }
    Ok(steps)
}
