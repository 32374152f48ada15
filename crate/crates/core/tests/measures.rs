use mahler_core::formulas::{closed_form, maillot_closed, maillot_special};
use mahler_core::mahler::{
    default_config, integrate_reduced, jensen_reduce, mahler_monte_carlo, mahler_quadrature, FamilySpec,
};
use mahler_core::numerics::{QuadMethod, QuadratureConfig};
use num_complex::Complex64;

fn families_at(a: f64) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in 0..=3 {
        out.push(FamilySpec::first_kind(n, a).unwrap());
    }
    for n in 0..=2 {
        out.push(FamilySpec::second_kind(n, a).unwrap());
    }
    out.push(FamilySpec::maillot_general(a, 1.0, 1.0).unwrap());
    out.push(FamilySpec::maillot_special(Complex64::new(0.4, a)).unwrap());
    out
}

#[test]
fn quadrature_agrees_with_monte_carlo() {
    let mut fams = vec![FamilySpec::maillot_variant()];
    for a in [0.5, 1.0, 2.0] {
        fams.extend(families_at(a));
    }
    for fam in fams {
        let q = mahler_quadrature(&fam, &default_config(&fam)).unwrap();
        let mc = mahler_monte_carlo(&fam, 200_000, 5).unwrap();
        let d = (q.re() - mc.re()).abs();
        assert!(d <= q.abs_error + mc.abs_error, "{} a={}: {} vs {}", fam.label(), fam.a, q.re(), mc.re());
    }
}

#[test]
fn inversion_identity() {
    for a in [2.0f64, 5.0] {
        let mut fams: Vec<FamilySpec> = (0..=3).map(|n| FamilySpec::first_kind(n, a).unwrap()).collect();
        fams.push(FamilySpec::second_kind(0, a).unwrap());
        for fam in fams {
            let inv = fam.inverted().unwrap();
            let m = mahler_quadrature(&fam, &default_config(&fam)).unwrap().re();
            let mi = mahler_quadrature(&inv, &default_config(&inv)).unwrap().re();
            assert!((m - a.ln() - mi).abs() < 1e-6, "{} a={a}: {m} vs log a + {mi}", fam.label());
        }
    }
}

#[test]
fn scaling_shifts_by_log() {
    for fam in [
        FamilySpec::first_kind(1, 0.7).unwrap(),
        FamilySpec::first_kind(2, 1.3).unwrap(),
        FamilySpec::second_kind(0, 0.6).unwrap(),
    ] {
        let f = jensen_reduce(&fam).unwrap();
        let cfg = default_config(&fam);
        let base = integrate_reduced(&f, &cfg).unwrap().re();
        let scaled = integrate_reduced(&f.scaled(2.0), &cfg).unwrap().re();
        assert!((scaled - base - 2f64.ln()).abs() < 1e-8, "{}", fam.label());
    }
}

#[test]
fn seeded_methods_reproduce() {
    let fam = FamilySpec::second_kind(1, 0.8).unwrap();
    let f = jensen_reduce(&fam).unwrap();
    let cfg = QuadratureConfig::new(QuadMethod::Qmc, 1 << 12, 1.0, 42);
    assert_eq!(integrate_reduced(&f, &cfg).unwrap(), integrate_reduced(&f, &cfg).unwrap());
    let a = mahler_monte_carlo(&fam, 5000, 9).unwrap();
    assert_eq!(a, mahler_monte_carlo(&fam, 5000, 9).unwrap());
    assert_ne!(a, mahler_monte_carlo(&fam, 5000, 10).unwrap());
}

#[test]
fn maillot_triangles_match_quadrature() {
    for (a, b, c) in [(1.0, 1.0, 1.0), (1.0, 1.5, 2.0), (0.3, 0.5, 0.7), (3.0, 1.0, 1.5), (4.0, 1.0, 1.0)] {
        let fam = FamilySpec::maillot_general(a, b, c).unwrap();
        let q = mahler_quadrature(&fam, &default_config(&fam)).unwrap();
        let m = maillot_closed(a, b, c).unwrap();
        assert!((q.re() - m).abs() < 1e-8, "({a},{b},{c}): {} vs {m}", q.re());
    }
}

#[test]
fn maillot_angle_convention_matches_quadrature() {
    // γ = |arg α| with D taken in the upper half plane, on both sides of the real axis.
    for alpha in [
        Complex64::new(0.3, 0.8),
        Complex64::new(0.3, -0.8),
        Complex64::new(-0.5, 0.4),
        Complex64::new(1.7, -0.6),
    ] {
        let fam = FamilySpec::maillot_special(alpha).unwrap();
        let q = mahler_quadrature(&fam, &default_config(&fam)).unwrap();
        let m = maillot_special(alpha).unwrap();
        assert!((q.re() - m).abs() < 1e-8, "{alpha}: {} vs {m}", q.re());
        let cf = closed_form(&fam).unwrap();
        assert_eq!(cf.re(), m);
    }
}
