//! Acceleration of alternating series (Cohen–Rodriguez Villegas–Zagier).

use crate::error::{Error, Result};
use crate::numerics::ValueWithError;

fn cvz_sum(terms: &[f64], n: usize) -> f64 {
    // Works on b_k = |a_k| with the overall sign of a_0 restored by the caller.
    let root = 3.0 + 8f64.sqrt();
    let d = 0.5 * (root.powi(n as i32) + root.powi(-(n as i32)));
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        c = b - c;
        s += c * terms[k].abs();
        let kf = k as f64;
        let nf = n as f64;
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Sums `Σ_{k≥0} term(k)` for an alternating series whose terms decrease in
/// magnitude. Returns an error if the sign pattern or monotonicity fails on
/// the terms it inspects.
pub fn accelerate_alternating(term: impl Fn(usize) -> f64, tol: f64) -> Result<ValueWithError> {
    const MAX_N: usize = 64;
    let mut terms: Vec<f64> = Vec::with_capacity(MAX_N + 4);
    let fill = |terms: &mut Vec<f64>, upto: usize| -> Result<()> {
        while terms.len() < upto {
            let k = terms.len();
            let t = term(k);
            if !t.is_finite() {
                return Err(Error::NonFinite(format!("alternating series term {k}")));
            }
            if let Some(&prev) = terms.last() {
                let alternates = (prev > 0.0 && t < 0.0) || (prev < 0.0 && t > 0.0) || t == 0.0;
                if !alternates || t.abs() > prev.abs() * (1.0 + 1e-12) {
                    return Err(Error::NotAlternating(k));
                }
            }
            terms.push(t);
        }
        Ok(())
    };
    let mut n = 8usize;
    loop {
        fill(&mut terms, n + 4)?;
        if terms[0] == 0.0 {
            return Ok(ValueWithError::ZERO);
        }
        let sign = terms[0].signum();
        let s_n = sign * cvz_sum(&terms, n);
        let s_m = sign * cvz_sum(&terms, n + 4);
        let bound = 2.0 * terms[0].abs() * (3.0 + 8f64.sqrt()).powi(-(n as i32 + 4));
        let err = (s_n - s_m).abs() + bound;
        let rounding = 16.0 * f64::EPSILON * terms[0].abs().max(s_m.abs());
        let total = err + rounding;
        if total <= tol || n + 4 >= MAX_N {
            if total > tol {
                return Err(Error::NonConvergence {
                    what: "alternating series acceleration".into(),
                    best: ValueWithError::real(s_m, total),
                });
            }
            return Ok(ValueWithError::real(s_m, total));
        }
        n += 8;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn log_two() {
        let r = accelerate_alternating(|k| if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64 + 1.0), 1e-14).unwrap();
        assert!((r.re() - 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn leibniz() {
        let r = accelerate_alternating(
            |k| if k % 2 == 0 { 1.0 } else { -1.0 } / (2.0 * k as f64 + 1.0),
            1e-14,
        )
        .unwrap();
        assert!((r.re() - PI / 4.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_positive_series() {
        let r = accelerate_alternating(|k| 1.0 / (k as f64 + 1.0).powi(2), 1e-12);
        assert!(matches!(r, Err(Error::NotAlternating(1))));
    }

    #[test]
    fn rejects_growing_terms() {
        let r = accelerate_alternating(|k| if k % 2 == 0 { 1.0 } else { -1.0 } * (k as f64 + 1.0), 1e-12);
        assert!(matches!(r, Err(Error::NotAlternating(1))));
    }
}
