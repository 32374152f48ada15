//! Characters modulo 4, single and double Dirichlet L-values and the two
//! double sums S₁, S₂ that appear in the a = 1 table.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{accelerate_alternating, CompensatedSum, ValueWithError};
use crate::polylog::zeta;

/// The three characters that occur: χ₀ (trivial, modulus 1), χ₋₄² (principal
/// modulo 4) and χ₋₄.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterSpec {
    Trivial,
    PrincipalMod4,
    ChiMinus4,
}

impl CharacterSpec {
    pub fn eval(self, n: i64) -> f64 {
        match self {
            CharacterSpec::Trivial => 1.0,
            CharacterSpec::PrincipalMod4 => (n.rem_euclid(2)) as f64,
            CharacterSpec::ChiMinus4 => match n.rem_euclid(4) {
                1 => 1.0,
                3 => -1.0,
                _ => 0.0,
            },
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CharacterSpec::Trivial => "chi0",
            CharacterSpec::PrincipalMod4 => "chi4sq",
            CharacterSpec::ChiMinus4 => "chi4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "chi0" | "trivial" => Some(CharacterSpec::Trivial),
            "chi4sq" | "principal_mod4" => Some(CharacterSpec::PrincipalMod4),
            "chi4" | "chi_minus4" => Some(CharacterSpec::ChiMinus4),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiLSpec {
    characters: Vec<CharacterSpec>,
    exponents: Vec<u32>,
}

impl MultiLSpec {
    pub fn new(characters: &[CharacterSpec], exponents: &[u32]) -> Result<Self> {
        if characters.is_empty() || characters.len() != exponents.len() {
            return Err(Error::domain("characters and exponents must be non-empty and of equal length"));
        }
        if exponents.contains(&0) {
            return Err(Error::domain("exponents must be positive"));
        }
        Ok(MultiLSpec {
            characters: characters.to_vec(),
            exponents: exponents.to_vec(),
        })
    }

    pub fn characters(&self) -> &[CharacterSpec] {
        &self.characters
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn depth(&self) -> usize {
        self.exponents.len()
    }

    /// Absolute convergence: last exponent > 1, all others ≥ 1.
    pub fn is_convergent(&self) -> bool {
        *self.exponents.last().unwrap() > 1
    }
}

fn chi4_alternating(s: u32) -> Result<ValueWithError> {
    accelerate_alternating(
        |j| {
            let t = 1.0 / ((2 * j + 1) as f64).powi(s as i32);
            if j % 2 == 0 {
                t
            } else {
                -t
            }
        },
        1e-14,
    )
}

/// Σ_{k≥1} χ(k)/k^s.
pub fn l_single(chi: CharacterSpec, s: u32) -> Result<ValueWithError> {
    if s == 0 {
        return Err(Error::domain("L-series exponent must be positive"));
    }
    match chi {
        CharacterSpec::ChiMinus4 => chi4_alternating(s),
        _ if s == 1 => Err(Error::Divergent(format!("L({}, 1)", chi.label()))),
        CharacterSpec::Trivial => Ok(ValueWithError::real(zeta(s)?, 4.0 * f64::EPSILON)),
        CharacterSpec::PrincipalMod4 => {
            let z = zeta(s)?;
            Ok(ValueWithError::real((1.0 - 2f64.powi(-(s as i32))) * z, 4.0 * f64::EPSILON))
        }
    }
}

/// Default truncation for the outer index of depth-2 sums.
pub const DEFAULT_OUTER_TERMS: u64 = 1 << 20;

/// The finite sum over 0 < k₁ < … < k_m ≤ k_max (depth ≤ 2).
pub fn l_multi_truncated(spec: &MultiLSpec, k_max: u64) -> Result<f64> {
    let ch = spec.characters();
    let ex = spec.exponents();
    match spec.depth() {
        1 => {
            let mut s = CompensatedSum::default();
            for k in 1..=k_max {
                s.add(Complex64::new(ch[0].eval(k as i64) / (k as f64).powi(ex[0] as i32), 0.0));
            }
            Ok(s.value().re)
        }
        2 => {
            let mut prefix = CompensatedSum::default();
            let mut s = CompensatedSum::default();
            for k in 1..=k_max {
                let kf = k as f64;
                let c2 = ch[1].eval(k as i64);
                if c2 != 0.0 {
                    s.add(prefix.value() * (c2 / kf.powi(ex[1] as i32)));
                }
                let c1 = ch[0].eval(k as i64);
                if c1 != 0.0 {
                    prefix.add(Complex64::new(c1 / kf.powi(ex[0] as i32), 0.0));
                }
            }
            Ok(s.value().re)
        }
        d => Err(Error::domain(format!("multiple L-values of depth {d} are not supported"))),
    }
}

/// L(χ₁, …, χ_m; n₁, …, n_m) for depth ≤ 2.
pub fn l_multi(spec: &MultiLSpec) -> Result<ValueWithError> {
    l_multi_with(spec, DEFAULT_OUTER_TERMS)
}

/// As [`l_multi`] with an explicit outer truncation N.
///
/// Depth 2: the inner prefix P(k) = Σ_{k₁<k} χ₁(k₁)/k₁^{n₁} is carried along
/// the outer sum. When P converges to L(χ₁, n₁) the outer tail is replaced by
/// L(χ₁,n₁)·(tail of L(χ₂,n₂)) and only Σ_{k>N} χ₂(k)(P(k) − P(∞))/k^{n₂} is
/// bounded. Otherwise the whole tail is bounded through |P(k)| ≤ 1 + log k.
pub fn l_multi_with(spec: &MultiLSpec, outer_terms: u64) -> Result<ValueWithError> {
    if !spec.is_convergent() {
        return Err(Error::domain(format!(
            "L-series with exponents {:?} does not converge absolutely",
            spec.exponents()
        )));
    }
    let ch = spec.characters();
    let ex = spec.exponents();
    if spec.depth() == 1 {
        return l_single(ch[0], ex[0]);
    }
    if spec.depth() > 2 {
        return Err(Error::domain("multiple L-values of depth > 2 are not supported"));
    }
    let n = outer_terms.max(16);
    let (n1, n2) = (ex[0], ex[1]);
    let (c1, c2) = (ch[0], ch[1]);

    let mut prefix = CompensatedSum::default();
    let mut outer = CompensatedSum::default();
    let mut single2 = CompensatedSum::default();
    for k in 1..=n {
        let kf = k as f64;
        let x2 = c2.eval(k as i64);
        if x2 != 0.0 {
            let w = x2 / kf.powi(n2 as i32);
            outer.add(prefix.value() * w);
            single2.add(Complex64::new(w, 0.0));
        }
        let x1 = c1.eval(k as i64);
        if x1 != 0.0 {
            prefix.add(Complex64::new(x1 / kf.powi(n1 as i32), 0.0));
        }
    }
    let partial = outer.value().re;
    let nf = n as f64;
    let inner_converges = n1 >= 2 || c1 == CharacterSpec::ChiMinus4;
    let rounding = 64.0 * f64::EPSILON * (1.0 + partial.abs());
    if inner_converges {
        let p_inf = l_single(c1, n1)?;
        let l2 = l_single(c2, n2)?;
        let tail2 = l2.re() - single2.value().re;
        let head = p_inf.re() * tail2;
        // |P(k) − P(∞)| is at most k^{−n₁} for χ₋₄ (alternating) and
        // (k−1)^{1−n₁}/(n₁−1) otherwise; sum the bound over k > N.
        let e = (n1 + n2 - 1) as f64;
        let rest = match c1 {
            CharacterSpec::ChiMinus4 => 1.0 / (e * nf.powf(e)),
            _ => 1.0 / ((n1 - 1) as f64 * (e - 1.0) * (nf - 1.0).powf(e - 1.0)),
        };
        let err = rest + p_inf.abs_error * tail2.abs() + l2.abs_error * p_inf.re().abs() + rounding;
        Ok(ValueWithError::real(partial + head, err))
    } else {
        // Σ_{k>N} (1 + log k)/k^{n₂} ≤ ∫_N^∞ (1 + log x) x^{−n₂} dx.
        let s = n2 as f64 - 1.0;
        let bound = (1.0 + nf.ln()) / (s * nf.powf(s)) + 1.0 / (s * s * nf.powf(s));
        Ok(ValueWithError::real(partial, bound + rounding))
    }
}

/// ζ(2) − Σ_{k≤j} 1/k², summed from the small end.
fn zeta2_tail(j: usize) -> f64 {
    let z2 = PI * PI / 6.0;
    let mut h = 0.0;
    for k in (1..=j).rev() {
        h += 1.0 / (k * k) as f64;
    }
    z2 - h
}

/// The j-th outer term of S₁: (−1)^j/(2j+1)² · Σ_{k>j} 1/k².
pub fn s1_outer_term(j: usize) -> f64 {
    let t = zeta2_tail(j) / ((2 * j + 1) as f64).powi(2);
    if j % 2 == 0 {
        t
    } else {
        -t
    }
}

/// S₁ = Σ_{0≤j<k} (−1)^j / ((2j+1)² k²).
pub fn double_sum_s1() -> Result<ValueWithError> {
    accelerate_alternating(s1_outer_term, 1e-14)
}

/// S₂ = Σ_{0≤j<k} (−1)^{j+k+1} / ((2j+1)³ k).
///
/// The inner sum over k > j equals log 2 − A(j) with A the alternating
/// harmonic prefix; (−1)^j(log 2 − A(j)) is positive and at most 1/(j+1), so
/// the outer series has positive terms bounded by 1/(8(j+½)⁴).
pub fn double_sum_s2() -> Result<ValueWithError> {
    double_sum_s2_with(200_000)
}

pub fn double_sum_s2_with(outer_terms: usize) -> Result<ValueWithError> {
    let n = outer_terms.max(8);
    let mut a = CompensatedSum::default();
    let mut s = CompensatedSum::default();
    for j in 0..n {
        if j > 0 {
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            a.add(Complex64::new(sign / j as f64, 0.0));
        }
        let inner = LN_2 - a.value().re;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        s.add(Complex64::new(sign * inner / ((2 * j + 1) as f64).powi(3), 0.0));
    }
    let x = n as f64 - 0.5;
    let tail = 1.0 / (24.0 * x * x * x);
    let v = s.value().re;
    Ok(ValueWithError::real(v, tail + 64.0 * f64::EPSILON * v.abs()))
}

/// E = Σ_{0<m<n, m even} χ₋₄(n)/(m n³) = L(χ₀,χ₋₄;1,3) − L(χ₋₄²,χ₋₄;1,3).
pub fn even_inner_sum() -> Result<ValueWithError> {
    let a = l_multi(&MultiLSpec::new(&[CharacterSpec::Trivial, CharacterSpec::ChiMinus4], &[1, 3])?)?;
    let b = l_multi(&MultiLSpec::new(&[CharacterSpec::PrincipalMod4, CharacterSpec::ChiMinus4], &[1, 3])?)?;
    Ok(a - b)
}

/// Right-hand side of the rearrangement of S₂:
/// (7/4)ζ(3)L(χ₋₄,1) − (3/2)ζ(2)L(χ₋₄,2) + 2 log 2·L(χ₋₄,3) + 2E.
///
/// The log 2 term enters with a plus sign: for odd n,
/// Σ_{l odd} (1/l − 1/(l+n)) = log 2 + Σ_{m even, m<n} 1/m.
pub fn s2_rearranged() -> Result<ValueWithError> {
    let z3 = zeta(3)?;
    let z2 = zeta(2)?;
    let l1 = l_single(CharacterSpec::ChiMinus4, 1)?;
    let l2 = l_single(CharacterSpec::ChiMinus4, 2)?;
    let l3 = l_single(CharacterSpec::ChiMinus4, 3)?;
    Ok(l1 * (1.75 * z3) - l2 * (1.5 * z2) + l3 * (2.0 * LN_2) + even_inner_sum()? * 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use CharacterSpec::*;

    const CATALAN: f64 = 0.915_965_594_177_219_015;

    #[test]
    fn character_table() {
        for n in 1..10_000i64 {
            let c = ChiMinus4.eval(n);
            assert_eq!(c, ChiMinus4.eval(n + 4));
            assert_eq!(ChiMinus4.eval(-n), -c);
            assert_eq!(PrincipalMod4.eval(n), c * c);
            assert_eq!(Trivial.eval(n), 1.0);
        }
    }

    #[test]
    fn single_anchors() {
        let v = l_single(ChiMinus4, 1).unwrap();
        assert!((v.re() - PI / 4.0).abs() < 1e-14);
        let v = l_single(ChiMinus4, 2).unwrap();
        assert!((v.re() - CATALAN).abs() < 1e-14);
        assert!((l_single(Trivial, 3).unwrap().re() - 1.202_056_903_159_594_3).abs() < 1e-15);
        // L(χ₋₄,3) = π³/32
        assert!((l_single(ChiMinus4, 3).unwrap().re() - PI.powi(3) / 32.0).abs() < 1e-14);
        assert!(matches!(l_single(Trivial, 1), Err(Error::Divergent(_))));
        assert!(matches!(l_single(PrincipalMod4, 1), Err(Error::Divergent(_))));
    }

    #[test]
    fn empty_index_set() {
        for (a, b) in [(Trivial, ChiMinus4), (ChiMinus4, PrincipalMod4)] {
            let spec = MultiLSpec::new(&[a, b], &[2, 2]).unwrap();
            assert_eq!(l_multi_truncated(&spec, 1).unwrap(), 0.0);
        }
    }

    #[test]
    fn divergent_spec_rejected() {
        let spec = MultiLSpec::new(&[ChiMinus4, Trivial], &[2, 1]).unwrap();
        assert!(!spec.is_convergent());
        assert!(matches!(l_multi(&spec), Err(Error::Domain(_))));
    }

    #[test]
    fn multiple_zeta_value() {
        // ζ(2,3) summed over k₁ < k₂ with 1/(k₁² k₂³); its value is
        // 3ζ(2)ζ(3) − 11ζ(5)/2.
        let spec = MultiLSpec::new(&[Trivial, Trivial], &[2, 3]).unwrap();
        let v = l_multi(&spec).unwrap();
        let want = 3.0 * zeta(2).unwrap() * zeta(3).unwrap() - 5.5 * zeta(5).unwrap();
        assert!((v.re() - want).abs() < 1e-12, "{} vs {want}", v.re());
        assert!(v.abs_error < 1e-11);
    }

    #[test]
    fn s1_first_outer_term() {
        // j = 0: Σ_{k≥1} 1/k² = ζ(2).
        assert!((s1_outer_term(0) - PI * PI / 6.0).abs() < 1e-15);
    }

    #[test]
    fn s1_matches_l_combination() {
        let s1 = double_sum_s1().unwrap();
        let a = l_multi(&MultiLSpec::new(&[ChiMinus4, Trivial], &[2, 2]).unwrap()).unwrap();
        let b = l_multi(&MultiLSpec::new(&[ChiMinus4, PrincipalMod4], &[2, 2]).unwrap()).unwrap();
        let d = (a - b).re() * 16.0;
        assert!((d - 4.0 * s1.re()).abs() < 1e-10, "{d} vs {}", 4.0 * s1.re());
    }

    #[test]
    fn s2_rearrangement() {
        let s2 = double_sum_s2().unwrap();
        let r = s2_rearranged().unwrap();
        assert!((s2.re() - r.re()).abs() < 1e-10, "{} vs {}", s2.re(), r.re());
    }
}
