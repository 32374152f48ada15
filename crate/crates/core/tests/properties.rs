use std::f64::consts::PI;

use mahler_core::dirichlet::{l_multi, l_single, CharacterSpec, MultiLSpec};
use mahler_core::formulas::{li32_reduction, piecewise_forms};
use mahler_core::hyperlog::{eval_hyperlog, li_auto, li_continued_default, BranchChoice, HyperlogWord};
use mahler_core::numerics::{integrate_1d, ode_along_path, IntegrationPath, QuadOptions};
use mahler_core::polylog::{bloch_wigner, li, li_multi, MultiIndex, SeriesBudget};
use mahler_core::script_l::{orbit, orbit_by_generators, script_l_r, script_l_r1, script_l_rs, script_l_rs1};
use num_complex::Complex64;
use proptest::prelude::*;

const CATALAN: f64 = 0.915_965_594_177_219_015;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn disk(r: f64) -> impl Strategy<Value = Complex64> {
    (0.0..r, 0.0..(2.0 * PI)).prop_map(|(m, t)| Complex64::from_polar(m, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn stuffle_depth_one_by_one(p in 1u32..=3, q in 1u32..=3, x in disk(0.8), y in disk(0.8)) {
        let b = SeriesBudget::default();
        let lp = li(p, x, &b).unwrap();
        let lq = li(q, y, &b).unwrap();
        let pq = li_multi(&MultiIndex::new(&[p, q]).unwrap(), &[x, y], &b).unwrap();
        let qp = li_multi(&MultiIndex::new(&[q, p]).unwrap(), &[y, x], &b).unwrap();
        let diag = li(p + q, x * y, &b).unwrap();
        let d = lp.value * lq.value - (pq.value + qp.value + diag.value);
        prop_assert!(d.norm() < 1e-10, "{d}");
    }

    #[test]
    fn series_and_continuation_overlap(
        n1 in 1u32..=3,
        n2 in 1u32..=3,
        depth in 1usize..=2,
        x in disk(0.7),
        y in disk(0.7),
    ) {
        let (idx, args) = if depth == 1 {
            (MultiIndex::new(&[n1]).unwrap(), vec![x])
        } else {
            (MultiIndex::new(&[n1, n2]).unwrap(), vec![x, y])
        };
        prop_assume!(args.iter().all(|z| z.norm() > 1e-3));
        let s = li_multi(&idx, &args, &SeriesBudget::default()).unwrap();
        let k = li_continued_default(&idx, &args).unwrap();
        prop_assert!((s.value - k.value).norm() <= 1e-9, "{} vs {}", s.value, k.value);
    }

    #[test]
    fn homotopy_class_difference(b in 0.05f64..0.95) {
        let w = HyperlogWord::new(vec![c(b, 0.0)]).unwrap();
        let lo = eval_hyperlog(&w, c(1.0, 0.0), &BranchChoice::LowerSemicircle).unwrap();
        let up = eval_hyperlog(&w, c(1.0, 0.0), &BranchChoice::UpperSemicircle).unwrap();
        prop_assert!((lo.value - up.value - c(0.0, 2.0 * PI)).norm() < 1e-10);
    }

    #[test]
    fn reversal_cancels_weight_one_words(
        p in proptest::collection::vec((-1.0f64..2.0, -1.0f64..1.0), 2..5),
        b in disk(3.0),
    ) {
        let pts: Vec<Complex64> = p.iter().map(|&(x, y)| c(x, y)).collect();
        let path = IntegrationPath::polyline(&pts).unwrap();
        prop_assume!(path.distance_to(b) > 0.1 * path.length().max(1.0));
        let f = ode_along_path(&path, &[b], 1e-13).unwrap()[0];
        let r = ode_along_path(&path.reversed(), &[b], 1e-13).unwrap()[0];
        prop_assert!((f + r).norm() < 1e-10);
    }

    #[test]
    fn integration_is_linear(
        p in proptest::collection::vec(-3.0f64..3.0, 1..8),
        q in proptest::collection::vec(-3.0f64..3.0, 1..8),
        alpha in -2.0f64..2.0,
        beta in -2.0f64..2.0,
    ) {
        let poly = |c: &[f64], x: f64| c.iter().rev().fold(0.0, |acc, &k| acc * x + k);
        // Values reach ~200, where an absolute 1e-12 sits below the rounding floor.
        let opts = QuadOptions {
            rel_tol: 1e-13,
            ..QuadOptions::with_tol(1e-12)
        };
        let fp = integrate_1d(|x| poly(&p, x), -1.0, 2.0, &opts).unwrap();
        let fq = integrate_1d(|x| poly(&q, x), -1.0, 2.0, &opts).unwrap();
        let both = integrate_1d(|x| alpha * poly(&p, x) + beta * poly(&q, x), -1.0, 2.0, &opts).unwrap();
        let bound = 2.0 * (both.abs_error + alpha.abs() * fp.abs_error + beta.abs() * fq.abs_error) + 1e-12;
        prop_assert!((both.value - alpha * fp.value - beta * fq.value).abs() <= bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn orbit_enumerations_match(a in 0.01f64..0.99, x in disk(2.0), y in disk(2.0)) {
        prop_assert_eq!(orbit(a, x, y), orbit_by_generators(a, x, y));
    }

    #[test]
    fn sign_laws(a in 0.1f64..3.0, pick in 0usize..3) {
        let one = c(1.0, 0.0);
        let i = c(0.0, 1.0);
        let (x, y) = [(one, i), (i, i), (i, one)][pick];
        let r = script_l_r(a, 2, x).unwrap().value;
        prop_assert!((script_l_r(a, 2, -x).unwrap().value + r).norm() < 1e-9);
        let r1 = script_l_r1(a, 2, x).unwrap().value;
        prop_assert!((script_l_r1(a, 2, -x).unwrap().value + r1).norm() < 1e-9);
        let s = script_l_rs(a, 2, 1, x, y).unwrap().value;
        prop_assert!((script_l_rs(a, 2, 1, -x, y).unwrap().value + s).norm() < 1e-9);
        prop_assert!((script_l_rs(a, 2, 1, x, -y).unwrap().value - s).norm() < 1e-9);
        let s1 = script_l_rs1(a, 2, 1, x, y).unwrap().value;
        prop_assert!((script_l_rs1(a, 2, 1, -x, y).unwrap().value + s1).norm() < 1e-9);
        prop_assert!((script_l_rs1(a, 2, 1, x, -y).unwrap().value - s1).norm() < 1e-9);
    }

    #[test]
    fn orbit_sum_invariant_under_inversion(a in 0.1f64..0.95) {
        let p = script_l_rs(a, 2, 1, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        let m = script_l_rs(1.0 / a, 2, 1, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        prop_assert!((p.value - m.value).norm() < 1e-9);
    }
}

#[test]
fn fourier_series_of_log_modulus() {
    let a: f64 = 0.5;
    for j in 0..100 {
        let t = 2.0 * PI * (j as f64 + 0.5) / 100.0;
        let lhs = (c(1.0, 0.0) + Complex64::from_polar(a, t)).norm().ln();
        let rhs: f64 = (1..80)
            .map(|n| {
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                sign * (n as f64 * t).cos() * a.powi(n) / n as f64
            })
            .sum();
        assert!((lhs - rhs).abs() < 1e-10, "t = {t}");
    }
}

#[test]
fn bloch_wigner_on_the_circle_is_a_log_sine_integral() {
    for j in 1..=20 {
        let theta = PI * j as f64 / 21.0;
        let opts = QuadOptions::with_tol(1e-12).singular_at(&[0.0]);
        let int = integrate_1d(|t| (2.0 * t.sin()).abs().ln(), 0.0, theta, &opts).unwrap();
        let d = bloch_wigner(Complex64::from_polar(1.0, 2.0 * theta));
        assert!((d + 2.0 * int.value).abs() < 1e-8, "theta = {theta}");
    }
}

#[test]
fn l_value_anchors() {
    let l1 = l_single(CharacterSpec::ChiMinus4, 1).unwrap();
    assert!((l1.re() - PI / 4.0).abs() < 1e-10);
    let l2 = l_single(CharacterSpec::ChiMinus4, 2).unwrap();
    assert!((l2.re() - CATALAN).abs() < 1e-10);
}

#[test]
fn trivial_characters_give_the_multiple_zeta_lattice_sum() {
    let spec = MultiLSpec::new(&[CharacterSpec::Trivial, CharacterSpec::Trivial], &[2, 3]).unwrap();
    let l = l_multi(&spec).unwrap();
    let z = li_multi(&MultiIndex::new(&[2, 3]).unwrap(), &[c(1.0, 0.0), c(1.0, 0.0)], &SeriesBudget::default())
        .unwrap();
    assert!((l.re() - z.re()).abs() < 1e-10, "{} {}", l.re(), z.re());
}

#[test]
fn li32_reduction_matches_direct_series() {
    let idx = MultiIndex::new(&[3, 2]).unwrap();
    for x in [1.0, -1.0] {
        for y in [1.0, -1.0] {
            let direct = li_auto(&idx, &[c(x, 0.0), c(y, 0.0)]).unwrap();
            let red = li32_reduction(x, y).unwrap();
            assert!((direct.re() - red).abs() < 1e-9, "({x}, {y}): {} vs {red}", direct.re());
            assert!(direct.im().abs() < 1e-9);
        }
    }
}

#[test]
fn piecewise_forms_are_continuous_at_one() {
    for p in piecewise_forms() {
        let f = p.f(1.0).unwrap().re();
        let g = p.g(1.0).unwrap().re();
        assert!((f - g).abs() <= 1e-9, "{}: {f} vs {g}", p.label);
    }
}

#[test]
fn closed_forms_are_nondecreasing() {
    let grid: Vec<f64> = (1..=40).map(|k| 0.1 * k as f64).collect();
    for p in piecewise_forms() {
        let vals: Vec<f64> = grid.iter().map(|&a| p.eval(a).unwrap().re()).collect();
        for w in vals.windows(2) {
            assert!(w[1] >= w[0] - 1e-12, "{}: {} then {}", p.label, w[0], w[1]);
        }
    }
}
