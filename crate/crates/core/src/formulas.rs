//! Closed forms for the Mahler measures of the families, the Maillot
//! formulas, and a registry of identities between them.
//!
//! Every family form returns the measure m(P) itself (not π^k·m(P)).

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::dirichlet::{double_sum_s1, double_sum_s2, even_inner_sum, l_multi, l_single, s2_rearranged, CharacterSpec, MultiLSpec};
use crate::error::{Error, Result};
use crate::hyperlog::{li_continued, BranchChoice};
use crate::mahler::{FamilyKind, FamilySpec};
use crate::numerics::ValueWithError;
use crate::polylog::{bloch_wigner, li, li_at_minus_one, li_multi, zeta, MultiIndex, SeriesBudget};
use crate::script_l::{script_l_r, script_l_r1, script_l_rs, script_l_rs1};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

fn check_a(a: f64) -> Result<()> {
    if a.is_finite() && a > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("parameter a = {a} must be positive")))
    }
}

/// Real part, with any imaginary residue folded into the error.
fn real(v: ValueWithError) -> ValueWithError {
    ValueWithError::real(v.re(), v.abs_error + v.im().abs())
}

/// m(1 + a y) = log⁺ a.
pub fn f1_n0(a: f64) -> f64 {
    a.ln().max(0.0)
}

fn f1_n1_raw(a: f64) -> Result<ValueWithError> {
    Ok(real((script_l_r(a, 2, I)? * -I).scale_re(1.0 / PI)))
}

/// m((1+x) + a(1−x)y) = −iℒ^a₂(i)/π, split at a = 1.
pub fn f1_n1(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    if a > 1.0 {
        Ok(f1_n1_raw(1.0 / a)? + ValueWithError::real(a.ln(), 0.0))
    } else {
        f1_n1_raw(a)
    }
}

/// −iℒ^a₂(i)/π by analytic continuation for every a.
pub fn f1_n1_continued(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    f1_n1_raw(a)
}

fn f1_n2_raw(a: f64) -> Result<ValueWithError> {
    let v = script_l_r(a, 3, ONE)? * 4.0 - script_l_r1(a, 2, ONE)? * 2.0;
    Ok(real(v).scale_re(1.0 / (PI * PI)))
}

/// m((1+w)(1+x) + a(1−w)(1−x)y) = (4ℒ^a₃(1) − 2ℒ^a_{2:1}(1))/π², split at 1.
pub fn f1_n2(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    if a > 1.0 {
        Ok(f1_n2_raw(1.0 / a)? + ValueWithError::real(a.ln(), 0.0))
    } else {
        f1_n2_raw(a)
    }
}

/// The same measure as (−iπℒ^a₂(i) − ℒ^a_{2,1}(1,i))/π², continued for all a.
pub fn f1_n2_alt(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    let v = script_l_r(a, 2, I)? * (-I * PI) - script_l_rs(a, 2, 1, ONE, I)?;
    Ok(real(v).scale_re(1.0 / (PI * PI)))
}

/// m((1+v)(1+w)(1+x) + a(1−v)(1−w)(1−x)y) =
/// (4πℒ^a₃(1) − 2πℒ^a_{2:1}(1) − 2i(ℒ^a_{2,2}(i,1) + ℒ^a_{2,1:1}(i,1)))/π³.
pub fn f1_n3(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    let low = (script_l_r(a, 3, ONE)? * 4.0 - script_l_r1(a, 2, ONE)? * 2.0) * PI;
    let high = (script_l_rs(a, 2, 2, I, ONE)? + script_l_rs1(a, 2, 1, I, ONE)?) * (-2.0 * I);
    Ok(real(low + high).scale_re(1.0 / PI.powi(3)))
}

fn f2_n0_raw(a: f64) -> Result<ValueWithError> {
    Ok(real(script_l_r(a, 3, ONE)? * 2.0).scale_re(1.0 / (PI * PI)))
}

/// m(1 + x + ay + az) = 2ℒ^a₃(1)/π² for a ≤ 1, log a + 2ℒ^{1/a}₃(1)/π² above.
pub fn f2_n0(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    if a > 1.0 {
        Ok(f2_n0_raw(1.0 / a)? + ValueWithError::real(a.ln(), 0.0))
    } else {
        f2_n0_raw(a)
    }
}

/// 2ℒ^x₃(1) continued along `branch`, for comparison with the split form.
pub fn two_script_l3_on_branch(x: f64, branch: &BranchChoice) -> Result<ValueWithError> {
    let idx = MultiIndex::new(&[3])?;
    let p = li_continued(&idx, &[Complex64::new(x, 0.0)], branch)?;
    let m = li_continued(&idx, &[Complex64::new(-x, 0.0)], branch)?;
    Ok((p - m) * 2.0)
}

/// |π²·m(1 + x + ay + az) − 2ℒ^a₃(1)| at a = x > 1, with ℒ continued along
/// the lower and the upper semicircle. Both are nonzero: the split form for
/// a ≥ 1 is no branch of 2ℒ^a₃(1).
pub fn split3_branch_gaps(x: f64) -> Result<[f64; 2]> {
    let lhs = f2_n0(x)?.re() * PI * PI;
    let mut out = [0.0; 2];
    for (slot, b) in out.iter_mut().zip([BranchChoice::LowerSemicircle, BranchChoice::UpperSemicircle]) {
        *slot = (two_script_l3_on_branch(x, &b)?.value - Complex64::new(lhs, 0.0)).norm();
    }
    Ok(out)
}

/// m((1+w)(1+x) + a(1−w)(y+z)) = (−iπ²ℒ^a₂(i) + 2iℒ^a_{3,1}(i,i))/π³.
pub fn f2_n1(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    let v = script_l_r(a, 2, I)? * (-I * PI * PI) + script_l_rs(a, 3, 1, I, I)? * (2.0 * I);
    Ok(real(v).scale_re(1.0 / PI.powi(3)))
}

/// m((1+v)(1+w)(1+x) + a(1−v)(1−w)(y+z)) =
/// (4π²ℒ^a₃(1) − 2π²ℒ^a_{2:1}(1) + 4(ℒ^a_{3,2}(1,1) + ℒ^a_{3,1:1}(1,1)))/π⁴.
pub fn f2_n2(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    let low = (script_l_r(a, 3, ONE)? * 4.0 - script_l_r1(a, 2, ONE)? * 2.0) * (PI * PI);
    let high = (script_l_rs(a, 3, 2, ONE, ONE)? + script_l_rs1(a, 3, 1, ONE, ONE)?) * 4.0;
    Ok(real(low + high).scale_re(1.0 / PI.powi(4)))
}

/// m(a + bx + cy) by Maillot's formula.
pub fn maillot_closed(a: f64, b: f64, c: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0 && c > 0.0) || !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::domain("Maillot coefficients must be positive and finite"));
    }
    if a >= b + c || b >= a + c || c >= a + b {
        return Ok(a.max(b).max(c).ln());
    }
    let angle = |opp: f64, s: f64, t: f64| ((s * s + t * t - opp * opp) / (2.0 * s * t)).clamp(-1.0, 1.0).acos();
    let alpha = angle(a, b, c);
    let beta = angle(b, a, c);
    let gamma = angle(c, a, b);
    let d = bloch_wigner(Complex64::from_polar(a / b, gamma));
    Ok((alpha * a.ln() + beta * b.ln() + gamma * c.ln() + d) / PI)
}

/// m(1 + αx + (1−α)y) with γ = |arg α| and D evaluated at α or ᾱ so that
/// the dilogarithm argument lies in the closed upper half plane.
pub fn maillot_special(alpha: Complex64) -> Result<f64> {
    if alpha.norm() == 0.0 || (alpha - 1.0).norm() == 0.0 || !alpha.re.is_finite() || !alpha.im.is_finite() {
        return Err(Error::domain("alpha must differ from 0 and 1"));
    }
    let z = if alpha.im >= 0.0 { alpha } else { alpha.conj() };
    let one_minus = ONE - alpha;
    Ok((alpha.arg().abs() * one_minus.norm().ln() + one_minus.arg().abs() * alpha.norm().ln() + bloch_wigner(z)) / PI)
}

/// m((1+w)(1+y) + (1−w)(x−y)) = (2ℒ¹₃(1) + (π²/2) log 2)/π².
pub fn maillot_variant() -> Result<ValueWithError> {
    let l = script_l_r(1.0, 3, ONE)?;
    Ok((real(l) * 2.0 + ValueWithError::real(PI * PI / 2.0 * LN_2, 0.0)).scale_re(1.0 / (PI * PI)))
}

fn li_at_sign(k: u32, s: f64) -> Result<f64> {
    if s > 0.0 {
        zeta(k)
    } else {
        li_at_minus_one(k)
    }
}

/// Li₃,₂(x, y) for x, y = ±1 from
/// −Li₅(xy)/2 + Li₃(x)Li₂(y) + 3Li₅(x) + 2Li₅(y) − Li₂(xy)(Li₃(x) + 2Li₃(y)).
pub fn li32_reduction(x: f64, y: f64) -> Result<f64> {
    if !(x == 1.0 || x == -1.0) || !(y == 1.0 || y == -1.0) {
        return Err(Error::domain("li32_reduction needs x, y in {1, -1}"));
    }
    let l = li_at_sign;
    let xy = x * y;
    Ok(-0.5 * l(5, xy)? + l(3, x)? * l(2, y)? + 3.0 * l(5, x)? + 2.0 * l(5, y)?
        - l(2, xy)? * (l(3, x)? + 2.0 * l(3, y)?))
}

/// π³·(row 3) from S₁: (7πζ(3) + 4S₁)/π³.
pub fn row3_from_s1() -> Result<ValueWithError> {
    let s1 = double_sum_s1()?;
    Ok((s1 * 4.0 + ValueWithError::real(7.0 * PI * zeta(3)?, 0.0)).scale_re(1.0 / PI.powi(3)))
}

/// (7πζ(3) + 16(L(χ₋₄,χ₀;2,2) − L(χ₋₄,χ₋₄²;2,2)))/π³.
pub fn row3_from_l_values() -> Result<ValueWithError> {
    use CharacterSpec::*;
    let a = l_multi(&MultiLSpec::new(&[ChiMinus4, Trivial], &[2, 2])?)?;
    let b = l_multi(&MultiLSpec::new(&[ChiMinus4, PrincipalMod4], &[2, 2])?)?;
    Ok(((a - b) * 16.0 + ValueWithError::real(7.0 * PI * zeta(3)?, 0.0)).scale_re(1.0 / PI.powi(3)))
}

/// (2π²L(χ₋₄,2) + 8S₂)/π³.
pub fn row5_from_s2() -> Result<ValueWithError> {
    let g = l_single(CharacterSpec::ChiMinus4, 2)?;
    Ok((g * (2.0 * PI * PI) + double_sum_s2()? * 8.0).scale_re(1.0 / PI.powi(3)))
}

/// ((7/2)πζ(3) + 16 log 2·L(χ₋₄,3) + 16(L(χ₀,χ₋₄;1,3) − L(χ₋₄²,χ₋₄;1,3)))/π³.
pub fn row5_from_l_values() -> Result<ValueWithError> {
    row5_l_form(1.0)
}

/// The same combination with the log 2 term subtracted instead of added.
pub fn row5_from_l_values_minus_log2() -> Result<ValueWithError> {
    row5_l_form(-1.0)
}

fn row5_l_form(log2_sign: f64) -> Result<ValueWithError> {
    let l3 = l_single(CharacterSpec::ChiMinus4, 3)?;
    let v = ValueWithError::real(3.5 * PI * zeta(3)?, 0.0) + l3 * (16.0 * LN_2 * log2_sign) + even_inner_sum()? * 16.0;
    Ok(v.scale_re(1.0 / PI.powi(3)))
}

/// A closed form split at a = 1 into F on (0, 1] and G on [1, ∞).
#[derive(Clone, Copy)]
pub struct PiecewiseClosedForm {
    pub label: &'static str,
    /// Homogeneity weight: the number of variables of the polynomial.
    pub weight: usize,
    pub family: fn(f64) -> Result<FamilySpec>,
    f: fn(f64) -> Result<ValueWithError>,
    g: fn(f64) -> Result<ValueWithError>,
}

impl std::fmt::Debug for PiecewiseClosedForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PiecewiseClosedForm")
            .field("label", &self.label)
            .field("weight", &self.weight)
            .finish()
    }
}

impl PiecewiseClosedForm {
    pub fn f(&self, a: f64) -> Result<ValueWithError> {
        (self.f)(a)
    }

    pub fn g(&self, a: f64) -> Result<ValueWithError> {
        (self.g)(a)
    }

    pub fn eval(&self, a: f64) -> Result<ValueWithError> {
        check_a(a)?;
        if a <= 1.0 {
            self.f(a)
        } else {
            self.g(a)
        }
    }
}

fn f1_n0_form(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    Ok(ValueWithError::real(f1_n0(a), 0.0))
}

fn log_a(a: f64) -> Result<ValueWithError> {
    check_a(a)?;
    Ok(ValueWithError::real(a.ln(), 0.0))
}

fn split_g1(a: f64) -> Result<ValueWithError> {
    Ok(f1_n1_raw(1.0 / a)? + log_a(a)?)
}

fn split_g2(a: f64) -> Result<ValueWithError> {
    Ok(f1_n2_raw(1.0 / a)? + log_a(a)?)
}

fn split_g3(a: f64) -> Result<ValueWithError> {
    Ok(f2_n0_raw(1.0 / a)? + log_a(a)?)
}

fn first(n: u32) -> fn(f64) -> Result<FamilySpec> {
    match n {
        0 => |a| FamilySpec::first_kind(0, a),
        1 => |a| FamilySpec::first_kind(1, a),
        2 => |a| FamilySpec::first_kind(2, a),
        _ => |a| FamilySpec::first_kind(3, a),
    }
}

fn second(n: u32) -> fn(f64) -> Result<FamilySpec> {
    match n {
        0 => |a| FamilySpec::second_kind(0, a),
        1 => |a| FamilySpec::second_kind(1, a),
        _ => |a| FamilySpec::second_kind(2, a),
    }
}

/// Closed forms of the first- and second-kind families in order of level.
/// Forms without an explicit split use analytic continuation on both sides.
pub fn piecewise_forms() -> Vec<PiecewiseClosedForm> {
    vec![
        PiecewiseClosedForm { label: "first_n0", weight: 1, family: first(0), f: f1_n0_form, g: log_a },
        PiecewiseClosedForm { label: "first_n1", weight: 2, family: first(1), f: f1_n1_raw, g: split_g1 },
        PiecewiseClosedForm { label: "first_n2", weight: 3, family: first(2), f: f1_n2_raw, g: split_g2 },
        PiecewiseClosedForm { label: "first_n3", weight: 4, family: first(3), f: f1_n3, g: f1_n3 },
        PiecewiseClosedForm { label: "second_n0", weight: 3, family: second(0), f: f2_n0_raw, g: split_g3 },
        PiecewiseClosedForm { label: "second_n1", weight: 4, family: second(1), f: f2_n1, g: f2_n1 },
        PiecewiseClosedForm { label: "second_n2", weight: 5, family: second(2), f: f2_n2, g: f2_n2 },
    ]
}

pub fn piecewise_form(label: &str) -> Option<PiecewiseClosedForm> {
    piecewise_forms().into_iter().find(|p| p.label == label)
}

/// Closed form for any family.
pub fn closed_form(family: &FamilySpec) -> Result<ValueWithError> {
    match family.kind {
        FamilyKind::FirstKind => match family.n {
            0 => Ok(ValueWithError::real(f1_n0(family.a), 0.0)),
            1 => f1_n1(family.a),
            2 => f1_n2(family.a),
            _ => f1_n3(family.a),
        },
        FamilyKind::SecondKind => match family.n {
            0 => f2_n0(family.a),
            1 => f2_n1(family.a),
            _ => f2_n2(family.a),
        },
        FamilyKind::MaillotVariant => maillot_variant(),
        FamilyKind::MaillotGeneral { a, b, c } => Ok(ValueWithError::real(maillot_closed(a, b, c)?, 1e-14)),
        FamilyKind::MaillotSpecial { alpha } => Ok(ValueWithError::real(maillot_special(alpha)?, 1e-14)),
    }
}

/// A verifiable identity lhs(a) = rhs(a), either over a parameter grid or
/// parameter-free (empty grid, evaluated once at a = 1).
#[derive(Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    pub param_grid: Vec<f64>,
    pub lhs: fn(f64) -> Result<ValueWithError>,
    pub rhs: fn(f64) -> Result<ValueWithError>,
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("param_grid", &self.param_grid)
            .finish()
    }
}

impl IdentityCase {
    pub fn params(&self) -> Vec<f64> {
        if self.param_grid.is_empty() {
            vec![1.0]
        } else {
            self.param_grid.clone()
        }
    }

    /// |lhs − rhs| at parameter a.
    pub fn residual(&self, a: f64) -> Result<(ValueWithError, ValueWithError, f64)> {
        let l = (self.lhs)(a)?;
        let r = (self.rhs)(a)?;
        Ok((l, r, (l.value - r.value).norm()))
    }
}

/// Parameter grid of the corollary check.
pub fn coro15_grid() -> Vec<f64> {
    vec![0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 2.0, 5.0, 10.0]
}

fn coro15_lhs(a: f64) -> Result<ValueWithError> {
    Ok(f1_n2(a)?.scale_re(PI * PI))
}

fn coro15_rhs(a: f64) -> Result<ValueWithError> {
    Ok(f1_n2_alt(a)?.scale_re(PI * PI))
}

fn z5_lhs(_: f64) -> Result<ValueWithError> {
    let l3 = script_l_r(1.0, 3, ONE)?;
    let l32 = script_l_rs(1.0, 3, 2, ONE, ONE)?;
    Ok(real(l3 * (4.0 * PI * PI) + l32 * 4.0))
}

fn z5_rhs(_: f64) -> Result<ValueWithError> {
    Ok(ValueWithError::real(93.0 * zeta(5)?, 1e-13))
}

fn li32_alt_lhs(_: f64) -> Result<ValueWithError> {
    let v = li32_reduction(1.0, 1.0)? - li32_reduction(-1.0, 1.0)? + li32_reduction(1.0, -1.0)? - li32_reduction(-1.0, -1.0)?;
    Ok(ValueWithError::real(v, 1e-14))
}

fn li32_alt_rhs(_: f64) -> Result<ValueWithError> {
    Ok(ValueWithError::real(-5.25 * zeta(2)? * zeta(3)? + 93.0 / 8.0 * zeta(5)?, 1e-14))
}

fn li32_series_lhs(_: f64) -> Result<ValueWithError> {
    let idx = MultiIndex::new(&[3, 2])?;
    let b = SeriesBudget::default();
    let s = |x: f64, y: f64| li_multi(&idx, &[Complex64::new(x, 0.0), Complex64::new(y, 0.0)], &b);
    Ok(real(s(1.0, 1.0)? - s(-1.0, 1.0)? + s(1.0, -1.0)? - s(-1.0, -1.0)?))
}

fn s2_direct(_: f64) -> Result<ValueWithError> {
    double_sum_s2()
}

fn s2_rearranged_case(_: f64) -> Result<ValueWithError> {
    s2_rearranged()
}

fn l1_lhs(_: f64) -> Result<ValueWithError> {
    row3_from_s1()
}

fn l1_rhs(_: f64) -> Result<ValueWithError> {
    row3_from_l_values()
}

fn l2_lhs(_: f64) -> Result<ValueWithError> {
    row5_from_s2()
}

fn l2_rhs(_: f64) -> Result<ValueWithError> {
    row5_from_l_values()
}

fn z3_variant_lhs(_: f64) -> Result<ValueWithError> {
    Ok(real(script_l_r(1.0, 3, ONE)? * 2.0))
}

fn z3_variant_rhs(_: f64) -> Result<ValueWithError> {
    let idx = zeta(3)?;
    Ok(ValueWithError::real(2.0 * (idx - li_at_minus_one(3)?), 1e-14))
}

fn equilateral_lhs(_: f64) -> Result<ValueWithError> {
    Ok(ValueWithError::real(maillot_special(Complex64::from_polar(1.0, PI / 3.0))?, 1e-14))
}

fn equilateral_rhs(_: f64) -> Result<ValueWithError> {
    Ok(ValueWithError::real(maillot_closed(1.0, 1.0, 1.0)?, 1e-14))
}

fn catalan_lhs(_: f64) -> Result<ValueWithError> {
    let v = li(2, I, &SeriesBudget::default())?;
    Ok(ValueWithError::real(v.im(), v.abs_error))
}

fn catalan_rhs(_: f64) -> Result<ValueWithError> {
    l_single(CharacterSpec::ChiMinus4, 2)
}

/// The registered identities.
pub fn identity_registry() -> Vec<IdentityCase> {
    vec![
        IdentityCase {
            id: "coro15",
            description: "4ℒ^a₃(1) − 2ℒ^a_{2:1}(1) = −iπℒ^a₂(i) − ℒ^a_{2,1}(1,i)",
            param_grid: coro15_grid(),
            lhs: coro15_lhs,
            rhs: coro15_rhs,
        },
        IdentityCase {
            id: "z5",
            description: "4π²ℒ¹₃(1) + 4ℒ¹_{3,2}(1,1) = 93ζ(5)",
            param_grid: vec![],
            lhs: z5_lhs,
            rhs: z5_rhs,
        },
        IdentityCase {
            id: "li32_alternating",
            description: "alternating sum of Li₃,₂(±1,±1) by reduction = −(21/4)ζ(2)ζ(3) + (93/8)ζ(5)",
            param_grid: vec![],
            lhs: li32_alt_lhs,
            rhs: li32_alt_rhs,
        },
        IdentityCase {
            id: "li32_series",
            description: "alternating sum of Li₃,₂(±1,±1) by series = reduction",
            param_grid: vec![],
            lhs: li32_series_lhs,
            rhs: li32_alt_lhs,
        },
        IdentityCase {
            id: "s2_rearrangement",
            description: "S₂ = (7/4)ζ(3)L(χ₋₄,1) − (3/2)ζ(2)L(χ₋₄,2) + 2 log 2·L(χ₋₄,3) + 2E",
            param_grid: vec![],
            lhs: s2_direct,
            rhs: s2_rearranged_case,
        },
        IdentityCase {
            id: "l1_form",
            description: "7πζ(3) + 4S₁ = 7πζ(3) + 16(L(χ₋₄,χ₀;2,2) − L(χ₋₄,χ₋₄²;2,2)), over π³",
            param_grid: vec![],
            lhs: l1_lhs,
            rhs: l1_rhs,
        },
        IdentityCase {
            id: "l2_form",
            description: "2π²L(χ₋₄,2) + 8S₂ = (7/2)πζ(3) + 16 log 2·L(χ₋₄,3) + 16E, over π³",
            param_grid: vec![],
            lhs: l2_lhs,
            rhs: l2_rhs,
        },
        IdentityCase {
            id: "zeta3_variant",
            description: "2ℒ¹₃(1) = 2(Li₃(1) − Li₃(−1)) = (7/2)ζ(3)",
            param_grid: vec![],
            lhs: z3_variant_lhs,
            rhs: z3_variant_rhs,
        },
        IdentityCase {
            id: "maillot_equilateral",
            description: "Maillot special at e^{iπ/3} = Maillot triangle (1,1,1)",
            param_grid: vec![],
            lhs: equilateral_lhs,
            rhs: equilateral_rhs,
        },
        IdentityCase {
            id: "catalan",
            description: "Im Li₂(i) = L(χ₋₄,2)",
            param_grid: vec![],
            lhs: catalan_lhs,
            rhs: catalan_rhs,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219_015;

    #[test]
    fn first_kind_at_one() {
        assert!((f1_n1(1.0).unwrap().re() - 2.0 * CATALAN / PI).abs() < 1e-13);
        let z3 = zeta(3).unwrap();
        assert!((f1_n2(1.0).unwrap().re() - 7.0 * z3 / (PI * PI)).abs() < 1e-13);
        assert!((f2_n0(1.0).unwrap().re() - 3.5 * z3 / (PI * PI)).abs() < 1e-13);
        assert_eq!(f1_n0(0.5), 0.0);
        assert_eq!(f1_n0(2.0), LN_2);
    }

    #[test]
    fn maillot_anchors() {
        let eq = maillot_closed(1.0, 1.0, 1.0).unwrap();
        assert!((eq - 0.323_065_947_219_450_4).abs() < 1e-12, "{eq}");
        assert_eq!(maillot_closed(3.0, 1.0, 1.0).unwrap(), 3f64.ln());
        assert_eq!(maillot_closed(1.0, 0.5, 0.5).unwrap(), 0.0);
        assert!(maillot_special(Complex64::new(0.5, 0.0)).unwrap().abs() < 1e-15);
        let v = maillot_variant().unwrap().re();
        assert!((v - 0.772_851_989_097_478_4).abs() < 1e-13, "{v}");
    }

    #[test]
    fn small_a_limit() {
        for f in [f1_n1, f1_n2, f2_n0] {
            assert!(f(1e-6).unwrap().re().abs() < 1e-5);
        }
    }

    #[test]
    fn split3_is_not_a_continuation() {
        for g in split3_branch_gaps(2.0).unwrap() {
            assert!(g >= 1e-3, "{g}");
        }
    }

    #[test]
    fn weights_are_variable_counts() {
        for p in piecewise_forms() {
            assert_eq!(p.weight, (p.family)(1.0).unwrap().variable_count(), "{}", p.label);
        }
    }

    #[test]
    fn registry_size() {
        assert!(identity_registry().len() >= 6);
    }
}
