use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{bail, Result};
use crate::grid::Grid;
use crate::math::{floor, sqrt};

/// Complex samples of a function on a [`Grid`].
///
/// The same type carries spectra: a spectrum is a signal whose grid is the
/// reciprocal (frequency) grid of some time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: Grid,
    values: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count() {
            bail!(InvalidSignal, "expected {} samples, got {}", grid.count(), values.len());
        }
        if let Some(j) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
            bail!(InvalidSignal, "sample {j} is not finite");
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        Self { grid, values: alloc::vec![Complex64::new(0.0, 0.0); grid.count()] }
    }

    pub fn from_fn(grid: Grid, mut f: impl FnMut(f64) -> Complex64) -> Result<Self> {
        let values = grid.points().map(&mut f).collect();
        Self::new(grid, values)
    }

    pub fn from_real_fn(grid: Grid, mut f: impl FnMut(f64) -> f64) -> Result<Self> {
        Self::from_fn(grid, |t| Complex64::new(f(t), 0.0))
    }

    #[inline]
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Same samples reinterpreted on another grid with the same count.
    pub(crate) fn with_grid(grid: Grid, values: Vec<Complex64>) -> Self {
        debug_assert_eq!(grid.count(), values.len());
        Self { grid, values }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.grid != other.grid {
            bail!(InvalidSignal, "signals live on different grids");
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(*a, *b)).collect();
        Ok(Self { grid: self.grid, values })
    }

    /// `f(-t)`. On the half-open grid `-t_j = t_{N-j}`, with `t_N` identified
    /// with `t_0` by periodicity.
    pub fn reflected(&self) -> Self {
        let n = self.values.len();
        let values = (0..n).map(|j| self.values[(n - j) % n]).collect();
        Self { grid: self.grid, values }
    }

    /// Linear interpolation at `t`; zero outside `[-T, T)`.
    pub fn interpolate(&self, t: f64) -> Complex64 {
        let d = self.grid.spacing();
        let x = (t + self.grid.half_width()) / d;
        if !(x >= 0.0) || x > (self.values.len() - 1) as f64 {
            return Complex64::new(0.0, 0.0);
        }
        let j = floor(x) as usize;
        if j + 1 >= self.values.len() {
            return self.values[j];
        }
        let w = x - j as f64;
        self.values[j] * (1.0 - w) + self.values[j + 1] * w
    }

    /// Plain `L²` norm `(Δ Σ |f_j|²)^{1/2}` (periodic trapezoid).
    pub fn l2_norm(&self) -> f64 {
        let s: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        sqrt(s * self.grid.spacing())
    }
}

/// Index range `[lo, hi)` outside which every sample is below
/// `rel_tol · max|f|`.
pub(crate) fn active_range(values: &[Complex64], rel_tol: f64) -> (usize, usize) {
    let peak = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if peak == 0.0 {
        return (0, 0);
    }
    let cut = rel_tol * peak;
    let lo = values.iter().position(|v| v.norm() > cut).unwrap_or(0);
    let hi = values.iter().rposition(|v| v.norm() > cut).map_or(0, |j| j + 1);
    (lo, hi)
}
