//! Closed-form test signals.

use crate::error::Result;
use crate::grid::Grid;
use crate::math::{exp, fabs, sin, sqrt, TWO_PI};
use crate::signal::SampledSignal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Fixture {
    /// `e^{-t²/2}`
    Gaussian,
    /// `e^{-1/(1-t²)}` on `(-1, 1)`
    Bump,
    /// `(4t⁴ - 12t² + 3) e^{-t²/2}`
    Hermite4,
    /// `√(t(1-t))` on `(0, 1)`
    SqrtArch,
    /// `√(1 - |2t-1|)` on `(0, 1)`
    SqrtTent,
    /// `√|sin 2πt|` on `(0, 1)`
    SqrtSine,
}

impl Fixture {
    pub const ALL: [Fixture; 6] =
        [Fixture::Gaussian, Fixture::Bump, Fixture::Hermite4, Fixture::SqrtArch, Fixture::SqrtTent, Fixture::SqrtSine];

    /// The smooth, rapidly decaying set used by the transform checks.
    pub const SMOOTH: [Fixture; 3] = [Fixture::Gaussian, Fixture::Bump, Fixture::Hermite4];

    /// Compactly supported on `(0, 1)` and exactly `C^{1/2}` there.
    pub const HALF_HOLDER: [Fixture; 3] = [Fixture::SqrtArch, Fixture::SqrtTent, Fixture::SqrtSine];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Gaussian => "gaussian",
            Fixture::Bump => "bump",
            Fixture::Hermite4 => "hermite4",
            Fixture::SqrtArch => "sqrt_arch",
            Fixture::SqrtTent => "sqrt_tent",
            Fixture::SqrtSine => "sqrt_sine",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn eval(self, t: f64) -> f64 {
        match self {
            Fixture::Gaussian => exp(-t * t / 2.0),
            Fixture::Bump => bump(t),
            Fixture::Hermite4 => {
                let t2 = t * t;
                (4.0 * t2 * t2 - 12.0 * t2 + 3.0) * exp(-t2 / 2.0)
            }
            Fixture::SqrtArch if t > 0.0 && t < 1.0 => sqrt(t * (1.0 - t)),
            Fixture::SqrtTent if t > 0.0 && t < 1.0 => sqrt(1.0 - fabs(2.0 * t - 1.0)),
            Fixture::SqrtSine if t > 0.0 && t < 1.0 => sqrt(fabs(sin(TWO_PI * t))),
            _ => 0.0,
        }
    }

    pub fn sample(self, grid: Grid) -> Result<SampledSignal> {
        SampledSignal::from_real_fn(grid, |t| self.eval(t))
    }
}

/// Standard `C^∞` bump `e^{-1/(1-t²)}`, zero outside `(-1, 1)`.
pub fn bump(t: f64) -> f64 {
    let s = 1.0 - t * t;
    if s <= 0.0 {
        0.0
    } else {
        exp(-1.0 / s)
    }
}
