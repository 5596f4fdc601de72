use core::f64::consts::PI;

use crate::error::{bail, Result};
use crate::math::is_power_of_two;

/// Uniform sample grid `t_j = -T + j·Δ`, `j = 0..N`, with `Δ = 2T/N`.
///
/// The grid is half-open: `-T` is a sample point, `+T` is not. Transforms
/// treat it as one period of a `2T`-periodic lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "GridRepr", into = "GridRepr"))]
pub struct Grid {
    half_width: f64,
    count: usize,
}

impl Grid {
    pub const MIN_COUNT: usize = 8;

    pub fn new(half_width: f64, count: usize) -> Result<Self> {
        if !(half_width.is_finite() && half_width > 0.0) {
            bail!(InvalidGrid, "half width must be positive and finite, got {half_width}");
        }
        if count < Self::MIN_COUNT || !is_power_of_two(count) {
            bail!(InvalidGrid, "sample count must be a power of two >= {}, got {count}", Self::MIN_COUNT);
        }
        Ok(Self { half_width, count })
    }

    #[inline]
    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.count as f64
    }

    #[inline]
    pub fn point(&self, j: usize) -> f64 {
        -self.half_width + j as f64 * self.spacing()
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        let d = self.spacing();
        let t0 = -self.half_width;
        (0..self.count).map(move |j| t0 + j as f64 * d)
    }

    /// Frequency grid paired with this grid by the FFT: half width `π/Δ`,
    /// spacing `2π/(NΔ)`.
    pub fn reciprocal(&self) -> Grid {
        Grid { half_width: PI / self.spacing(), count: self.count }
    }

    /// Same sample count, half width multiplied by `factor` (> 0).
    pub fn scaled(&self, factor: f64) -> Result<Grid> {
        Grid::new(self.half_width * factor, self.count)
    }

    /// Nyquist angular frequency `π/Δ`.
    pub fn nyquist(&self) -> f64 {
        PI / self.spacing()
    }
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct GridRepr {
    #[serde(rename = "T")]
    half_width: f64,
    #[serde(rename = "N")]
    count: usize,
}

#[cfg(feature = "serde")]
impl TryFrom<GridRepr> for Grid {
    type Error = crate::Error;
    fn try_from(r: GridRepr) -> Result<Self> {
        Grid::new(r.half_width, r.count)
    }
}

#[cfg(feature = "serde")]
impl From<Grid> for GridRepr {
    fn from(g: Grid) -> Self {
        GridRepr { half_width: g.half_width, count: g.count }
    }
}
