//! Unitary continuous Fourier transform `f̂(ξ) = (2π)^{-1/2} ∫ e^{-iξt} f(t) dt`
//! evaluated on the grid paired with the input grid.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::alias::AliasPolicy;
use crate::error::Result;
use crate::fft::{fft, Direction};
use crate::math::{cis, sqrt};
use crate::signal::SampledSignal;

/// `f̂` on `f.grid().reciprocal()`, with the default [`AliasPolicy`].
pub fn fourier(f: &SampledSignal) -> Result<SampledSignal> {
    fourier_with(f, &AliasPolicy::default())
}

pub fn fourier_with(f: &SampledSignal, policy: &AliasPolicy) -> Result<SampledSignal> {
    policy.check(f.values(), "fourier input")?;
    Ok(transform(f, Direction::Forward))
}

/// Inverse of [`fourier`]: kernel `e^{+iξt}`, output on the reciprocal of the
/// spectrum grid (which is the original time grid).
pub fn inverse_fourier(g: &SampledSignal) -> Result<SampledSignal> {
    inverse_fourier_with(g, &AliasPolicy::default())
}

pub fn inverse_fourier_with(g: &SampledSignal, policy: &AliasPolicy) -> Result<SampledSignal> {
    policy.check(g.values(), "inverse_fourier input")?;
    Ok(transform(g, Direction::Inverse))
}

/// With `t_j = -T + jΔ` and `ξ_k = -π/Δ + 2πk/(NΔ)`,
/// `e^{∓iξ_k t_j} = e^{∓iπN/2} (-1)^{j+k} e^{∓2πijk/N}`.
pub(crate) fn transform(f: &SampledSignal, dir: Direction) -> SampledSignal {
    let grid = *f.grid();
    let n = grid.count();
    let mut buf: alloc::vec::Vec<Complex64> =
        f.values().iter().enumerate().map(|(j, v)| if j % 2 == 0 { *v } else { -v }).collect();
    fft(&mut buf, dir);
    let sign = if dir == Direction::Forward { -1.0 } else { 1.0 };
    let scale = cis(sign * PI * n as f64 / 2.0) * (grid.spacing() / sqrt(2.0 * PI));
    for (k, v) in buf.iter_mut().enumerate() {
        *v *= if k % 2 == 0 { scale } else { -scale };
    }
    SampledSignal::with_grid(grid.reciprocal(), buf)
}
