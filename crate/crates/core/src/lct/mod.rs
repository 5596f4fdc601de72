//! Quadratic-phase transforms: the LCT, the fractional Fourier transform,
//! the frequency-side operator `G` and the limit operator `L_a`.
//!
//! The free functions use [`Engine::default`].

mod engine;
mod params;
mod profile;
mod quad;

use alloc::vec::Vec;

use num_complex::Complex64;

pub use engine::{Engine, EngineConfig, Path, Prepared};
pub(crate) use params::unitary_d;
pub use params::LctParams;
pub use profile::{BProfile, ProfileKind};
pub(crate) use quad::linear_phase_sum;

use crate::error::Result;
use crate::signal::SampledSignal;

pub fn lct_direct(p: &LctParams, f: &SampledSignal, u: &[f64]) -> Result<Vec<Complex64>> {
    Engine::default().lct_direct(p, f, u)
}

pub fn lct_chirp(p: &LctParams, f: &SampledSignal) -> Result<SampledSignal> {
    Engine::default().lct_chirp(p, f)
}

pub fn frft(alpha: f64, f: &SampledSignal) -> Result<SampledSignal> {
    Engine::default().frft(alpha, f)
}

pub fn g_alpha(a: f64, b: f64, d: Complex64, f: &SampledSignal, u: &[f64]) -> Result<Vec<Complex64>> {
    Engine::default().g_alpha(a, b, d, f, u)
}

pub fn l_a(a: f64, profile: &BProfile, f: &SampledSignal, u: &[f64]) -> Result<Vec<Complex64>> {
    Engine::default().l_a(a, profile, f, u)
}
