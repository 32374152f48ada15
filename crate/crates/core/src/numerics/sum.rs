//! Deterministic summation helpers.

use std::ops::Add;

use num_complex::Complex64;

/// Pairwise (cascade) summation. The reduction tree depends only on the
/// slice length, so the result is reproducible for a fixed input order.
pub fn pairwise_sum<T>(values: &[T]) -> T
where
    T: Copy + Default + Add<Output = T>,
{
    const LEAF: usize = 32;
    if values.len() <= LEAF {
        return values.iter().fold(T::default(), |acc, &v| acc + v);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Streaming accumulator that keeps block sums and reduces them pairwise.
#[derive(Debug, Clone)]
pub struct BlockAccumulator {
    block: Vec<f64>,
    partials: Vec<f64>,
    block_len: usize,
}

impl BlockAccumulator {
    pub fn new(block_len: usize) -> Self {
        BlockAccumulator {
            block: Vec::with_capacity(block_len),
            partials: Vec::new(),
            block_len: block_len.max(1),
        }
    }

    pub fn push(&mut self, x: f64) {
        self.block.push(x);
        if self.block.len() == self.block_len {
            self.partials.push(pairwise_sum(&self.block));
            self.block.clear();
        }
    }

    pub fn total(&self) -> f64 {
        let mut parts = self.partials.clone();
        if !self.block.is_empty() {
            parts.push(pairwise_sum(&self.block));
        }
        pairwise_sum(&parts)
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn add(&mut self, x: Complex64) {
        neumaier(&mut self.sum.re, &mut self.comp.re, x.re);
        neumaier(&mut self.sum.im, &mut self.comp.im, x.im);
    }

    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_exact_integer_sum() {
        let v: Vec<f64> = (1..=10_000).map(|k| k as f64).collect();
        assert_eq!(pairwise_sum(&v), 50_005_000.0);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::default();
        acc.add(Complex64::new(1.0, 0.0));
        for _ in 0..1000 {
            acc.add(Complex64::new(1e-17, 1e-17));
        }
        acc.add(Complex64::new(-1.0, 0.0));
        // A plain sum returns exactly 0 for the real part.
        assert!((acc.value() - Complex64::new(1e-14, 1e-14)).norm() < 1e-25);
    }

    #[test]
    fn block_accumulator_agrees_with_pairwise() {
        let v: Vec<f64> = (0..5000).map(|k| 1.0 / (1.0 + k as f64)).collect();
        let mut acc = BlockAccumulator::new(256);
        v.iter().for_each(|&x| acc.push(x));
        assert!((acc.total() - pairwise_sum(&v)).abs() < 1e-13);
    }
}
