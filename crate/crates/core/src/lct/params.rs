use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{bail, Result};
use crate::math::{cis, fabs, signum, sin, sqrt, tan};

/// Parameters of `D ∫ e^{i(Au²/2 - But + Ct²/2)} f(t) dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LctParams {
    #[cfg_attr(feature = "serde", serde(rename = "A"))]
    pub a: f64,
    #[cfg_attr(feature = "serde", serde(rename = "B"))]
    pub b: f64,
    #[cfg_attr(feature = "serde", serde(rename = "C"))]
    pub c: f64,
    #[cfg_attr(feature = "serde", serde(rename = "D"))]
    pub d: Complex64,
}

impl LctParams {
    pub fn new(a: f64, b: f64, c: f64, d: Complex64) -> Result<Self> {
        let p = Self { a, b, c, d };
        p.validate()?;
        Ok(p)
    }

    /// `D = √(|B|/2π) e^{-iπ/4 sgn B}`.
    pub fn unitary(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(a, b, c, unitary_d(b))
    }

    /// `[cot α, csc α, cot α]` with `D = √((1 - i cot α)/2π)`.
    pub fn frft(alpha: f64) -> Result<Self> {
        let s = sin(alpha);
        if fabs(s) < 1e-12 {
            bail!(Degenerate, "fractional order {alpha} is a multiple of π");
        }
        let cot = 1.0 / tan(alpha);
        Self::new(cot, 1.0 / s, cot, (Complex64::new(1.0, -cot) / (2.0 * PI)).sqrt())
    }

    pub fn validate(&self) -> Result<()> {
        let Self { a, b, c, d } = *self;
        if !(a.is_finite() && b.is_finite() && c.is_finite() && d.re.is_finite() && d.im.is_finite()) {
            bail!(InvalidParameter, "LCT parameters must be finite");
        }
        if b == 0.0 {
            bail!(InvalidParameter, "B must be nonzero");
        }
        Ok(())
    }

    /// Whether `|D| = √(|B|/2π)` to relative precision `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let want = sqrt(fabs(self.b) / (2.0 * PI));
        fabs(self.d.norm() - want) <= tol * want
    }
}

pub(crate) fn unitary_d(b: f64) -> Complex64 {
    cis(-PI / 4.0 * signum(b)) * sqrt(fabs(b) / (2.0 * PI))
}
