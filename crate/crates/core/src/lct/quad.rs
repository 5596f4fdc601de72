use alloc::vec::Vec;

use num_complex::Complex64;

use crate::math::{cis, cos, fabs, pairwise_sum, TWO_PI};

const BLOCK: usize = 32;

/// `Σ_k w_k e^{iω(x₀ + k·dx)}`.
///
/// The phase is advanced by complex multiplication inside blocks of 32 terms
/// and recomputed exactly at each block start; block sums are reduced
/// pairwise.
pub(crate) fn linear_phase_sum(w: &[Complex64], x0: f64, dx: f64, omega: f64) -> Complex64 {
    if w.is_empty() {
        return Complex64::new(0.0, 0.0);
    }
    let step = cis(omega * dx);
    let mut blocks = Vec::with_capacity(w.len() / BLOCK + 1);
    for (b, chunk) in w.chunks(BLOCK).enumerate() {
        let k0 = b * BLOCK;
        let mut ph = cis(omega * (x0 + k0 as f64 * dx));
        let mut acc = Complex64::new(0.0, 0.0);
        for v in chunk {
            acc += v * ph;
            ph *= step;
        }
        blocks.push(acc);
    }
    pairwise_sum(&blocks)
}

/// Tukey window of taper fraction `r` over `n` samples; `None` when `r = 0`.
pub(crate) fn tukey(n: usize, r: f64) -> Option<Vec<f64>> {
    if r <= 0.0 {
        return None;
    }
    let m = (n - 1) as f64;
    Some(
        (0..n)
            .map(|j| {
                let x = j as f64 / m;
                let edge = x.min(1.0 - x);
                if edge >= r / 2.0 {
                    1.0
                } else {
                    0.5 * (1.0 - cos(TWO_PI * edge / r))
                }
            })
            .collect(),
    )
}

/// Closed interval `[lo, hi]` used for instantaneous-frequency bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Span {
    pub lo: f64,
    pub hi: f64,
}

impl Span {
    pub fn new(a: f64, b: f64) -> Self {
        Self { lo: a.min(b), hi: a.max(b) }
    }

    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(k * self.lo, k * self.hi)
    }

    pub fn plus(self, o: Span) -> Self {
        Self { lo: self.lo + o.lo, hi: self.hi + o.hi }
    }

    pub fn reach(self) -> f64 {
        fabs(self.lo).max(fabs(self.hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_sum_matches_naive() {
        let w: Vec<Complex64> = (0..1000).map(|k| Complex64::new(1.0 / (1.0 + k as f64), 0.3)).collect();
        let (x0, dx, om) = (-3.0, 0.013, 37.5);
        let naive: Complex64 = w.iter().enumerate().map(|(k, v)| v * cis(om * (x0 + k as f64 * dx))).sum();
        assert!((linear_phase_sum(&w, x0, dx, om) - naive).norm() < 1e-12 * naive.norm().max(1.0));
    }

    #[test]
    fn tukey_ends_and_middle() {
        let w = tukey(101, 0.2).unwrap();
        assert_eq!(w[0], 0.0);
        assert_eq!(w[50], 1.0);
        assert!(tukey(8, 0.0).is_none());
    }
}
