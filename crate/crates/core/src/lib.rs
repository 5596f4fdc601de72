//! Linear canonical transforms on sampled signals.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised in four layers:
//!
//! * [`Grid`], [`SampledSignal`], the unitary continuous Fourier transform
//!   ([`fourier`], [`inverse_fourier`]) and the norm family in [`norm`];
//! * [`lct`]: the quadratic-phase transforms themselves (direct quadrature
//!   and chirp–FFT paths, the fractional Fourier transform, the frequency-side
//!   operator `G` and the limit operator `L_a`);
//! * [`subgroup`]: the trigonometric, parabolic and hyperbolic one-parameter
//!   families and their exact parameter composition law;
//! * [`lab`]: convergence experiments that produce [`lab::ExperimentReport`]s.
//!
//! All reals are `f64`; every operation is a pure function of its inputs.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

mod alias;
mod error;
mod fft;
mod fourier;
mod grid;
mod math;
mod signal;

pub mod fixtures;
pub mod lab;
pub mod lct;
pub mod norm;
pub mod subgroup;

pub use alias::AliasPolicy;
pub use error::{Error, Result};
pub use fourier::{fourier, fourier_with, inverse_fourier, inverse_fourier_with};
pub use grid::Grid;
pub use norm::{norm, NormSpec};
pub use signal::SampledSignal;

pub use num_complex::Complex64;
