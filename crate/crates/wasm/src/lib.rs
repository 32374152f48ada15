//! Browser bindings: measure curves of the families, the Bloch–Wigner
//! dilogarithm on a grid, and Maillot's m(a + bx + cy).

use mahler_core::formulas::{closed_form, maillot_closed};
use mahler_core::mahler::FamilySpec;
use mahler_core::polylog::bloch_wigner;
use num_complex::Complex64;
use wasm_bindgen::prelude::*;

fn family(kind: &str, n: u32, a: f64) -> Option<FamilySpec> {
    match kind {
        "first" => FamilySpec::first_kind(n, a).ok(),
        "second" => FamilySpec::second_kind(n, a).ok(),
        _ => None,
    }
}

/// Closed-form m(P_a) at `steps` evenly spaced a in [lo, hi]; NaN where the
/// family or parameter is invalid.
#[wasm_bindgen]
pub fn family_curve(kind: &str, n: u32, lo: f64, hi: f64, steps: u32) -> Vec<f64> {
    let steps = steps.clamp(2, 2000);
    (0..steps)
        .map(|k| {
            let a = lo + (hi - lo) * k as f64 / (steps - 1) as f64;
            family(kind, n, a)
                .and_then(|f| closed_form(&f).ok())
                .map_or(f64::NAN, |v| v.re())
        })
        .collect()
}

/// D(z) on a width × height grid over [re_lo, re_hi] × [im_lo, im_hi],
/// row-major from the top (largest imaginary part).
#[wasm_bindgen]
pub fn bloch_wigner_field(re_lo: f64, re_hi: f64, im_lo: f64, im_hi: f64, width: u32, height: u32) -> Vec<f64> {
    let (w, h) = (width.clamp(1, 1024), height.clamp(1, 1024));
    let step = |lo: f64, hi: f64, k: u32, n: u32| if n == 1 { lo } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 };
    let mut out = Vec::with_capacity((w * h) as usize);
    for j in 0..h {
        let im = step(im_hi, im_lo, j, h);
        for i in 0..w {
            out.push(bloch_wigner(Complex64::new(step(re_lo, re_hi, i, w), im)));
        }
    }
    out
}

/// m(a + bx + cy); NaN unless a, b, c > 0.
#[wasm_bindgen]
pub fn maillot_measure(a: f64, b: f64, c: f64) -> f64 {
    maillot_closed(a, b, c).unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_endpoints() {
        let v = family_curve("first", 1, 1.0, 2.0, 3);
        assert_eq!(v.len(), 3);
        assert!((v[0] - 0.583_121_808_061_637_6).abs() < 1e-12);
        assert!(family_curve("third", 1, 1.0, 2.0, 3).iter().all(|x| x.is_nan()));
    }

    #[test]
    fn field_is_odd_under_conjugation() {
        let f = bloch_wigner_field(-1.0, 2.0, -1.0, 1.0, 7, 5);
        assert_eq!(f.len(), 35);
        for i in 0..7 {
            assert!((f[i] + f[28 + i]).abs() < 1e-14);
            assert!(f[14 + i].abs() < 1e-14);
        }
    }

    #[test]
    fn maillot_values() {
        assert!((maillot_measure(1.0, 1.0, 1.0) - 0.323_065_947_219_450_4).abs() < 1e-12);
        assert_eq!(maillot_measure(5.0, 1.0, 1.0), 5f64.ln());
        assert!(maillot_measure(-1.0, 1.0, 1.0).is_nan());
    }
}
