//! Orbit sums of multiple polylogarithms over the group G generated by the
//! two sign flips σ1, σ2 and the inversion τ acting on the pair (a, 1/a).

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hyperlog::li_auto;
use crate::numerics::ValueWithError;
use crate::polylog::MultiIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub s1: bool,
    pub s2: bool,
    pub t: bool,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        s1: false,
        s2: false,
        t: false,
    };
    pub const SIGMA1: GroupElement = GroupElement {
        s1: true,
        s2: false,
        t: false,
    };
    pub const SIGMA2: GroupElement = GroupElement {
        s1: false,
        s2: true,
        t: false,
    };
    pub const TAU: GroupElement = GroupElement {
        s1: false,
        s2: false,
        t: true,
    };

    /// All 8 elements, enumerated directly.
    pub fn all() -> [GroupElement; 8] {
        let mut out = [GroupElement::IDENTITY; 8];
        for (i, g) in out.iter_mut().enumerate() {
            *g = GroupElement {
                s1: i & 1 != 0,
                s2: i & 2 != 0,
                t: i & 4 != 0,
            };
        }
        out
    }

    pub fn compose(self, other: GroupElement) -> GroupElement {
        GroupElement {
            s1: self.s1 ^ other.s1,
            s2: self.s2 ^ other.s2,
            t: self.t ^ other.t,
        }
    }

    /// χ(σ1) = -1, χ(σ2) = χ(τ) = 1.
    pub fn chi(self) -> f64 {
        if self.s1 {
            -1.0
        } else {
            1.0
        }
    }

    /// Image of (a, 1/a): coordinate-wise inversion if τ, then sign flips.
    pub fn act(self, a: f64) -> (f64, f64) {
        let (mut u, mut v) = if self.t { (1.0 / a, a) } else { (a, 1.0 / a) };
        if self.s1 {
            u = -u;
        }
        if self.s2 {
            v = -v;
        }
        (u, v)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.s1 {
            parts.push("σ1");
        }
        if self.s2 {
            parts.push("σ2");
        }
        if self.t {
            parts.push("τ");
        }
        if parts.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitTerm {
    pub sigma: GroupElement,
    pub arg_pair: (Complex64, Complex64),
    pub chi: f64,
    /// log of the absolute value of the first coordinate of (a, 1/a)^σ.
    pub log_weight: f64,
}

fn term(sigma: GroupElement, a: f64, x: Complex64, y: Complex64) -> OrbitTerm {
    let (u, v) = sigma.act(a);
    OrbitTerm {
        sigma,
        arg_pair: (x * u, y * v),
        chi: sigma.chi(),
        log_weight: u.abs().ln(),
    }
}

/// The 8 orbit terms from the direct table of group elements.
pub fn orbit(a: f64, x: Complex64, y: Complex64) -> Vec<OrbitTerm> {
    GroupElement::all().iter().map(|&g| term(g, a, x, y)).collect()
}

/// The 8 orbit terms obtained by closing {id} under composition with the
/// generators σ1, σ2, τ. Sorted like [`orbit`].
pub fn orbit_by_generators(a: f64, x: Complex64, y: Complex64) -> Vec<OrbitTerm> {
    let gens = [GroupElement::SIGMA1, GroupElement::SIGMA2, GroupElement::TAU];
    let mut elems = vec![GroupElement::IDENTITY];
    let mut frontier = vec![GroupElement::IDENTITY];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let k = g.compose(h);
            if !elems.contains(&k) {
                elems.push(k);
                frontier.push(k);
            }
        }
    }
    let key = |g: &GroupElement| (g.s1 as u8) | ((g.s2 as u8) << 1) | ((g.t as u8) << 2);
    elems.sort_by_key(key);
    elems.into_iter().map(|g| term(g, a, x, y)).collect()
}

fn check_a(a: f64) -> Result<()> {
    if a.is_finite() && a > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("parameter a = {a} must be positive")))
    }
}

/// ℒ^a_r(x) = Li_r(xa) - Li_r(-xa).
pub fn script_l_r(a: f64, r: u32, x: Complex64) -> Result<ValueWithError> {
    check_a(a)?;
    let idx = MultiIndex::new(&[r])?;
    let p = li_auto(&idx, &[x * a])?;
    let m = li_auto(&idx, &[-x * a])?;
    Ok(p - m)
}

/// ℒ^a_{r:1}(x) = log|a| ℒ^a_r(x).
pub fn script_l_r1(a: f64, r: u32, x: Complex64) -> Result<ValueWithError> {
    check_a(a)?;
    if a == 1.0 {
        return Ok(ValueWithError::ZERO);
    }
    Ok(script_l_r(a, r, x)? * a.ln())
}

fn orbit_sum(a: f64, r: u32, s: u32, x: Complex64, y: Complex64, weighted: bool) -> Result<ValueWithError> {
    check_a(a)?;
    let idx = MultiIndex::new(&[r, s])?;
    let mut total = ValueWithError::ZERO;
    for t in orbit(a, x, y) {
        let w = if weighted { t.log_weight } else { 1.0 };
        if w == 0.0 {
            continue;
        }
        let v = li_auto(&idx, &[t.arg_pair.0, t.arg_pair.1]).map_err(|e| Error::OrbitTerm {
            sigma: t.sigma.to_string(),
            source: Box::new(e),
        })?;
        total = total + v * (t.chi * w);
    }
    Ok(total)
}

/// ℒ^a_{r,s}(x, y) = Σ_σ χ(σ) Li_{r,s}((x, y)∘(a, 1/a)^σ).
pub fn script_l_rs(a: f64, r: u32, s: u32, x: Complex64, y: Complex64) -> Result<ValueWithError> {
    orbit_sum(a, r, s, x, y, false)
}

/// ℒ^a_{r,s:1}(x, y) = Σ_σ χ(σ) log|(a, 1/a)^σ_1| Li_{r,s}(…). Terms whose
/// log weight vanishes are skipped.
pub fn script_l_rs1(a: f64, r: u32, s: u32, x: Complex64, y: Complex64) -> Result<ValueWithError> {
    orbit_sum(a, r, s, x, y, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const CATALAN: f64 = 0.915_965_594_177_219_015;

    #[test]
    fn group_table() {
        let all = GroupElement::all();
        for (i, g) in all.iter().enumerate() {
            for h in &all[i + 1..] {
                assert_ne!(g, h);
            }
            assert_eq!(g.compose(*g), GroupElement::IDENTITY);
        }
        assert_eq!(all.iter().filter(|g| g.chi() < 0.0).count(), 4);
    }

    #[test]
    fn orbit_enumerations_agree() {
        let a = orbit(0.37, c(1.0, 0.0), c(0.0, 1.0));
        let b = orbit_by_generators(0.37, c(1.0, 0.0), c(0.0, 1.0));
        assert_eq!(a, b);
        let w: Vec<f64> = a.iter().map(|t| t.log_weight).collect();
        assert!(w.iter().all(|v| (v.abs() - 0.37f64.ln().abs()).abs() < 1e-15));
    }

    #[test]
    fn depth_one_anchors() {
        let v = script_l_r(1.0, 2, c(0.0, 1.0)).unwrap();
        assert!((v.value - c(0.0, 2.0 * CATALAN)).norm() < 1e-13);
        let v = script_l_r(1e-9, 2, c(0.0, 1.0)).unwrap();
        assert!(v.value.norm() < 1e-8);
        let odd: f64 = (0..60).map(|j| 0.5f64.powi(2 * j + 1) / ((2 * j + 1) as f64).powi(3)).sum();
        let v = script_l_r(0.5, 3, c(1.0, 0.0)).unwrap();
        assert!((v.re() - 2.0 * odd).abs() < 1e-14);
        assert_eq!(script_l_r1(1.0, 2, c(1.0, 0.0)).unwrap().value, c(0.0, 0.0));
        let e = std::f64::consts::E;
        let ratio = script_l_r1(e, 2, c(0.0, 1.0)).unwrap().value / script_l_r(e, 2, c(0.0, 1.0)).unwrap().value;
        assert!((ratio - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn a_equals_one_value() {
        // 2π·Catalan - 7ζ(3)
        let v = script_l_rs(1.0, 2, 1, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        let want = 2.0 * PI * CATALAN - 7.0 * 1.202_056_903_159_594_3;
        assert!((v.value - c(want, 0.0)).norm() < 1e-11, "{} vs {want}", v.value);
    }

    #[test]
    fn weighted_sum_vanishes_at_one() {
        let v = script_l_rs1(1.0, 2, 1, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        assert_eq!(v.value, c(0.0, 0.0));
    }

    #[test]
    fn orbit_sums_invariant_under_inversion() {
        // τ maps the orbit of a onto the orbit of 1/a term by term, carrying
        // χ and the log weight of the first coordinate along.
        let p = script_l_rs1(2.0, 2, 1, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        let m = script_l_rs1(0.5, 2, 1, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        assert!((p.value - m.value).norm() < 1e-9, "{} {}", p.value, m.value);
        let p = script_l_rs(2.0, 2, 1, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        let m = script_l_rs(0.5, 2, 1, c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        assert!((p.value - m.value).norm() < 1e-9);
    }
}
