//! Hyperlogarithms (iterated integrals of dt/(t - b)) and analytic
//! continuation of multiple polylogarithms through them:
//!
//! Li_{n_1..n_m}(x_1..x_m) = (-1)^m I_{n_1..n_m}((x_1⋯x_m)^{-1} : … : x_m^{-1} : 1)

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::ode::{beside_end, iterated_integral, OdeOptions};
use crate::numerics::{IntegrationPath, ValueWithError};
use crate::polylog::{li_multi, MultiIndex, SeriesBudget};

/// Expanded word b_1, ..., b_w: each a_i followed by n_i - 1 zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperlogWord {
    poles: Vec<Complex64>,
    source: Option<(MultiIndex, Vec<Complex64>)>,
}

impl HyperlogWord {
    pub fn new(poles: Vec<Complex64>) -> Result<Self> {
        match poles.first() {
            None => Err(Error::domain("hyperlogarithm word must be non-empty")),
            Some(b) if b.norm() == 0.0 => Err(Error::domain("first letter of a hyperlogarithm word must be nonzero")),
            Some(_) => Ok(HyperlogWord { poles, source: None }),
        }
    }

    /// Word for I_{n}(a_1 : … : a_m : endpoint).
    pub fn from_multi_index(idx: &MultiIndex, a: &[Complex64]) -> Result<Self> {
        if idx.depth() != a.len() {
            return Err(Error::domain("multi-index depth does not match the number of letters"));
        }
        let mut poles = Vec::with_capacity(idx.weight() as usize);
        for (&n, &ai) in idx.indices().iter().zip(a) {
            if ai.norm() == 0.0 || !(ai.re.is_finite() && ai.im.is_finite()) {
                return Err(Error::domain(format!("hyperlogarithm letter {ai} must be finite and nonzero")));
            }
            poles.push(ai);
            poles.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), n as usize - 1));
        }
        Ok(HyperlogWord {
            poles,
            source: Some((idx.clone(), a.to_vec())),
        })
    }

    pub fn poles(&self) -> &[Complex64] {
        &self.poles
    }

    pub fn weight(&self) -> usize {
        self.poles.len()
    }

    pub fn source(&self) -> Option<&(MultiIndex, Vec<Complex64>)> {
        self.source.as_ref()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BranchChoice {
    RealSegment,
    LowerSemicircle,
    UpperSemicircle,
    Custom(IntegrationPath),
}

impl BranchChoice {
    pub fn path(&self, endpoint: Complex64) -> IntegrationPath {
        let zero = Complex64::new(0.0, 0.0);
        match self {
            BranchChoice::RealSegment => IntegrationPath::line(zero, endpoint),
            BranchChoice::LowerSemicircle => IntegrationPath::lower_semicircle(endpoint),
            BranchChoice::UpperSemicircle => IntegrationPath::upper_semicircle(endpoint),
            BranchChoice::Custom(p) => p.clone(),
        }
    }

    fn tag(&self) -> Option<u8> {
        match self {
            BranchChoice::RealSegment => Some(0),
            BranchChoice::LowerSemicircle => Some(1),
            BranchChoice::UpperSemicircle => Some(2),
            BranchChoice::Custom(_) => None,
        }
    }

    fn alternative(&self) -> &'static str {
        match self {
            BranchChoice::RealSegment => "try LowerSemicircle",
            BranchChoice::LowerSemicircle => "try UpperSemicircle or a custom path",
            BranchChoice::UpperSemicircle => "try LowerSemicircle or a custom path",
            BranchChoice::Custom(_) => "try one of the semicircles",
        }
    }
}

/// The straight segment when it clears every pole away from its end points,
/// otherwise the lower semicircle.
pub fn default_branch(poles: &[Complex64], endpoint: Complex64) -> BranchChoice {
    let seg = IntegrationPath::line(Complex64::new(0.0, 0.0), endpoint);
    let clearance = OdeOptions::default().clearance_rel * endpoint.norm();
    let near = |a: Complex64, b: Complex64| (a - b).norm() <= 1e-13 * (1.0 + a.norm());
    let blocked = poles.iter().any(|&b| {
        let d = seg.distance_to(b);
        !near(b, Complex64::new(0.0, 0.0))
            && !near(b, endpoint)
            && d < clearance
            && !beside_end(b, Complex64::new(0.0, 0.0), d)
            && !beside_end(b, endpoint, d)
    });
    if blocked {
        BranchChoice::LowerSemicircle
    } else {
        BranchChoice::RealSegment
    }
}

type CacheKey = (Vec<(u64, u64)>, (u64, u64), u8);

fn cache() -> &'static RwLock<HashMap<CacheKey, ValueWithError>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, ValueWithError>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

const CACHE_LIMIT: usize = 200_000;

fn bits(z: Complex64) -> (u64, u64) {
    (z.re.to_bits(), z.im.to_bits())
}

/// Iterated integral of the word along the chosen branch from 0 to `endpoint`.
pub fn eval_hyperlog(word: &HyperlogWord, endpoint: Complex64, branch: &BranchChoice) -> Result<ValueWithError> {
    eval_hyperlog_with(word, endpoint, branch, &OdeOptions::default())
}

pub fn eval_hyperlog_with(
    word: &HyperlogWord,
    endpoint: Complex64,
    branch: &BranchChoice,
    opts: &OdeOptions,
) -> Result<ValueWithError> {
    let key = branch.tag().map(|t| {
        let mut tag = t;
        // Different tolerances must not share cache entries.
        if opts.local_tol != OdeOptions::default().local_tol {
            tag |= 0x80;
        }
        (word.poles.iter().map(|&b| bits(b)).collect::<Vec<_>>(), bits(endpoint), tag)
    });
    if let Some(k) = &key {
        if let Ok(map) = cache().read() {
            if let Some(v) = map.get(k) {
                return Ok(*v);
            }
        }
    }
    let path = branch.path(endpoint);
    let value = iterated_integral(&path, &word.poles, opts).map_err(|e| match e {
        Error::PoleOnPath {
            index,
            pole,
            distance,
            clearance,
            ..
        } => Error::PoleOnPath {
            index,
            pole,
            distance,
            clearance,
            hint: branch.alternative().into(),
        },
        other => other,
    })?;
    if let Some(k) = key {
        if let Ok(mut map) = cache().write() {
            if map.len() >= CACHE_LIMIT {
                map.clear();
            }
            map.insert(k, value);
        }
    }
    Ok(value)
}

/// Letters a_i = (x_i ⋯ x_m)^{-1} of the conversion.
pub fn conversion_letters(args: &[Complex64]) -> Result<Vec<Complex64>> {
    if args.iter().any(|x| x.norm() == 0.0) {
        return Err(Error::domain("zero polylogarithm argument puts a letter at infinity"));
    }
    let mut letters = vec![Complex64::new(0.0, 0.0); args.len()];
    let mut acc = Complex64::new(1.0, 0.0);
    for i in (0..args.len()).rev() {
        acc *= args[i];
        letters[i] = acc.inv();
    }
    Ok(letters)
}

/// Multiple polylogarithm continued along `branch` (a path from 0 to 1).
pub fn li_continued(idx: &MultiIndex, args: &[Complex64], branch: &BranchChoice) -> Result<ValueWithError> {
    let letters = conversion_letters(args)?;
    let word = HyperlogWord::from_multi_index(idx, &letters)?;
    let v = eval_hyperlog(&word, Complex64::new(1.0, 0.0), branch)?;
    Ok(if idx.depth() % 2 == 0 { v } else { -v })
}

/// [`li_continued`] on the default branch for its word.
pub fn li_continued_default(idx: &MultiIndex, args: &[Complex64]) -> Result<ValueWithError> {
    let letters = conversion_letters(args)?;
    let word = HyperlogWord::from_multi_index(idx, &letters)?;
    let branch = default_branch(word.poles(), Complex64::new(1.0, 0.0));
    let v = eval_hyperlog(&word, Complex64::new(1.0, 0.0), &branch)?;
    Ok(if idx.depth() % 2 == 0 { v } else { -v })
}

/// Series where it converges, otherwise continuation on the default branch.
pub fn li_auto(idx: &MultiIndex, args: &[Complex64]) -> Result<ValueWithError> {
    match li_multi(idx, args, &SeriesBudget::default()) {
        Err(Error::UseContinuation { .. }) | Err(Error::NonConvergence { .. }) => li_continued_default(idx, args),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polylog::li;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn weight_one_log() {
        let w = HyperlogWord::new(vec![c(2.0, 0.0)]).unwrap();
        let v = eval_hyperlog(&w, c(1.0, 0.0), &BranchChoice::RealSegment).unwrap();
        assert!((v.value - c(-(2f64.ln()), 0.0)).norm() < 1e-12);
        for b in [1.5, 3.0, 10.0] {
            let w = HyperlogWord::new(vec![c(b, 0.0)]).unwrap();
            let v = eval_hyperlog(&w, c(1.0, 0.0), &BranchChoice::RealSegment).unwrap();
            assert!((v.re() - ((b - 1.0) / b).ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn dilog_from_word() {
        let a = 0.7;
        let w = HyperlogWord::new(vec![c(0.0, -1.0 / a), c(0.0, 0.0)]).unwrap();
        let v = eval_hyperlog(&w, c(1.0, 0.0), &BranchChoice::RealSegment).unwrap();
        let s = li(2, c(0.0, a), &SeriesBudget::default()).unwrap();
        assert!((v.value + s.value).norm() < 1e-11, "{} vs {}", v.value, s.value);
    }

    #[test]
    fn word_validation() {
        assert!(HyperlogWord::new(vec![]).is_err());
        assert!(HyperlogWord::new(vec![c(0.0, 0.0), c(1.0, 0.0)]).is_err());
        let idx = MultiIndex::new(&[2, 3]).unwrap();
        let w = HyperlogWord::from_multi_index(&idx, &[c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        assert_eq!(w.weight(), 5);
        assert_eq!(w.poles()[2], c(3.0, 0.0));
    }

    #[test]
    fn default_branch_avoids_real_poles() {
        assert_eq!(default_branch(&[c(2.0, 0.0)], c(1.0, 0.0)), BranchChoice::RealSegment);
        assert_eq!(default_branch(&[c(0.5, 0.0)], c(1.0, 0.0)), BranchChoice::LowerSemicircle);
        assert_eq!(default_branch(&[c(0.5, 0.3)], c(1.0, 0.0)), BranchChoice::RealSegment);
        assert_eq!(default_branch(&[c(1.0, 0.0), c(0.0, 0.0)], c(1.0, 0.0)), BranchChoice::RealSegment);
    }

    #[test]
    fn pole_on_real_segment_suggests_branch() {
        let w = HyperlogWord::new(vec![c(0.5, 0.0)]).unwrap();
        match eval_hyperlog(&w, c(1.0, 0.0), &BranchChoice::RealSegment) {
            Err(Error::PoleOnPath { hint, index, .. }) => {
                assert_eq!(index, 1);
                assert!(hint.contains("LowerSemicircle"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn log_difference_on_lower_branch() {
        let idx = MultiIndex::new(&[1]).unwrap();
        let p = li_continued(&idx, &[c(2.0, 0.0)], &BranchChoice::LowerSemicircle).unwrap();
        let m = li_continued(&idx, &[c(-2.0, 0.0)], &BranchChoice::LowerSemicircle).unwrap();
        assert!((p.value - m.value - c(3f64.ln(), -PI)).norm() < 1e-11);
    }

    #[test]
    fn overlap_with_series() {
        let idx = MultiIndex::new(&[2]).unwrap();
        let v = li_continued(&idx, &[c(0.5, 0.0)], &BranchChoice::RealSegment).unwrap();
        let s = li(2, c(0.5, 0.0), &SeriesBudget::default()).unwrap();
        assert!((v.value - s.value).norm() < 1e-11);
    }

    #[test]
    fn cache_returns_identical_values() {
        let w = HyperlogWord::new(vec![c(-1.7, 0.2), c(0.0, 0.0), c(3.0, -1.0)]).unwrap();
        let a = eval_hyperlog(&w, c(1.0, 0.0), &BranchChoice::RealSegment).unwrap();
        let b = eval_hyperlog(&w, c(1.0, 0.0), &BranchChoice::RealSegment).unwrap();
        assert_eq!(a, b);
    }
}
