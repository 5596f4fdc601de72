//! The trigonometric, parabolic and hyperbolic one-parameter LCT families,
//! their composition law and group-law checks.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{bail, Result};
use crate::lct::{unitary_d, Engine, LctParams};
use crate::math::{cosh, fabs, round, signum, sin, sinh, tan};
use crate::signal::SampledSignal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Family {
    /// `cot`/`csc` entries
    I,
    /// `1/α` entries
    II,
    /// `coth`/`csch` entries
    III,
}

/// One member of a family, tuned by frequency `ω`, dilation `λ` and chirp
/// offset `γ` (`C - A = 2γ`).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct SubgroupSpec {
    pub family: Family,
    #[cfg_attr(feature = "serde", serde(default = "one"))]
    pub omega: f64,
    #[cfg_attr(feature = "serde", serde(default = "one"))]
    pub lambda: f64,
    #[cfg_attr(feature = "serde", serde(default))]
    pub gamma: f64,
}

#[cfg(feature = "serde")]
fn one() -> f64 {
    1.0
}

impl SubgroupSpec {
    pub fn new(family: Family, omega: f64, lambda: f64, gamma: f64) -> Result<Self> {
        let s = Self { family, omega, lambda, gamma };
        s.validate()?;
        Ok(s)
    }

    /// The fractional Fourier transform family.
    pub fn frft() -> Self {
        Self { family: Family::I, omega: 1.0, lambda: 1.0, gamma: 0.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega.is_finite() && self.lambda.is_finite() && self.gamma.is_finite()) {
            bail!(InvalidParameter, "subgroup knobs must be finite");
        }
        if self.lambda == 0.0 {
            bail!(InvalidParameter, "lambda must be nonzero");
        }
        if self.family != Family::II && self.omega == 0.0 {
            bail!(InvalidParameter, "omega must be nonzero for families I and III");
        }
        Ok(())
    }
}

/// `|A+C|`-denominator and pole-distance tolerances.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct AlgebraConfig {
    pub pole_tol: f64,
    pub denom_tol: f64,
}

impl Default for AlgebraConfig {
    fn default() -> Self {
        Self { pole_tol: 1e-6, denom_tol: 1e-12 }
    }
}

/// Absolute deviations in the four composition equations.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupResidual {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl GroupResidual {
    pub fn max(&self) -> f64 {
        self.a.max(self.b).max(self.c).max(self.d)
    }
}

/// What a family member reduces to at a pole of its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Limit {
    Regular,
    Identity,
    Parity,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Algebra {
    config: AlgebraConfig,
}

impl Algebra {
    pub fn new(config: AlgebraConfig) -> Result<Self> {
        if !(config.pole_tol > 0.0 && config.denom_tol > 0.0) {
            bail!(InvalidParameter, "algebra tolerances must be positive");
        }
        Ok(Self { config })
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.config
    }

    fn check_pole(&self, spec: &SubgroupSpec, alpha: f64) -> Result<()> {
        spec.validate()?;
        if !alpha.is_finite() {
            bail!(InvalidParameter, "alpha must be finite");
        }
        let tol = self.config.pole_tol;
        match spec.family {
            Family::I => {
                let x = spec.omega * alpha;
                let n = round(x / PI);
                if fabs(x - n * PI) < tol {
                    bail!(Degenerate, "family I: omega*alpha = {x} is within {tol:e} of {n}π");
                }
            }
            Family::II | Family::III => {
                let x = if spec.family == Family::III { spec.omega * alpha } else { alpha };
                if fabs(alpha) < tol || fabs(x) < tol {
                    bail!(Degenerate, "family {:?}: alpha = {alpha} is within {tol:e} of the pole at 0", spec.family);
                }
            }
        }
        Ok(())
    }

    /// `(A, B, C)` of the family member at `alpha`, with `D` from
    /// [`Algebra::d_solution`].
    pub fn family_params(&self, spec: &SubgroupSpec, alpha: f64) -> Result<LctParams> {
        self.check_pole(spec, alpha)?;
        let (cotlike, csclike) = core_entries(spec, alpha);
        let l = spec.lambda;
        let g = spec.gamma;
        LctParams::new(cotlike / l - g, csclike / l, cotlike / l + g, self.d_solution(spec, alpha)?)
    }

    /// Normalizer solving the multiplicative `D` equation with unit modulus
    /// factor: `√((1 - i sgn(λ) cot ωα)/(2π|λ|))` for family I and
    /// `√(|B|/2π) e^{-iπ/4 sgn B}` otherwise.
    pub fn d_solution(&self, spec: &SubgroupSpec, alpha: f64) -> Result<Complex64> {
        self.check_pole(spec, alpha)?;
        let (cotlike, csclike) = core_entries(spec, alpha);
        Ok(match spec.family {
            Family::I => {
                let l = spec.lambda;
                (Complex64::new(1.0, -signum(l) * cotlike) / (2.0 * PI * fabs(l))).sqrt()
            }
            Family::II | Family::III => unitary_d(csclike / spec.lambda),
        })
    }

    /// `q ∘ p` (apply `p`, then `q`).
    pub fn compose(&self, q: &LctParams, p: &LctParams) -> Result<LctParams> {
        q.validate()?;
        p.validate()?;
        let s = p.a + q.c;
        if fabs(s) < self.config.denom_tol {
            bail!(Degenerate, "not composable: A(p) + C(q) = {s:e}");
        }
        let d = q.d * p.d * (Complex64::new(0.0, 2.0 * PI) / s).sqrt();
        LctParams::new(q.a - q.b * q.b / s, q.b * p.b / s, p.c - p.b * p.b / s, d)
    }

    /// Componentwise `|P(β) ∘ P(α) - P(α+β)|`.
    pub fn group_residual(&self, spec: &SubgroupSpec, alpha: f64, beta: f64) -> Result<GroupResidual> {
        let pa = self.family_params(spec, alpha)?;
        let pb = self.family_params(spec, beta)?;
        let want = self.family_params(spec, alpha + beta)?;
        let got = self.compose(&pb, &pa)?;
        Ok(GroupResidual {
            a: fabs(got.a - want.a),
            b: fabs(got.b - want.b),
            c: fabs(got.c - want.c),
            d: (got.d - want.d).norm(),
        })
    }

    fn limit(&self, spec: &SubgroupSpec, alpha: f64, eps: f64) -> Limit {
        match spec.family {
            Family::I => {
                let x = spec.omega * alpha;
                let n = round(x / PI);
                if fabs(x - n * PI) <= eps {
                    if (n as i64).rem_euclid(2) == 0 {
                        Limit::Identity
                    } else {
                        Limit::Parity
                    }
                } else {
                    Limit::Regular
                }
            }
            Family::II | Family::III => {
                let x = if spec.family == Family::III { spec.omega * alpha } else { alpha };
                if fabs(x) <= eps || fabs(alpha) <= eps {
                    Limit::Identity
                } else {
                    Limit::Regular
                }
            }
        }
    }

    /// Applies the family member at `alpha` through the chirp path. Within
    /// the engine's branch tolerance of a pole the exact limit (identity or
    /// `f(-u)`) is used.
    pub fn apply(&self, engine: &Engine, spec: &SubgroupSpec, alpha: f64, f: &SampledSignal) -> Result<SampledSignal> {
        spec.validate()?;
        match self.limit(spec, alpha, engine.config().branch_eps) {
            Limit::Identity => Ok(f.clone()),
            Limit::Parity => Ok(f.reflected()),
            Limit::Regular => engine.lct_chirp(&self.family_params(spec, alpha)?, f),
        }
    }

    /// `‖P(α)(P(β) f) - P(α+β) f‖ / ‖f‖` on the grid of the two-step result.
    /// The reference is a direct quadrature at those points.
    pub fn operator_group_check(
        &self,
        engine: &Engine,
        spec: &SubgroupSpec,
        alpha: f64,
        beta: f64,
        f: &SampledSignal,
    ) -> Result<f64> {
        let g1 = self.apply(engine, spec, beta, f)?;
        let g2 = self.apply(engine, spec, alpha, &g1)?;
        let pts: alloc::vec::Vec<f64> = g2.grid().points().collect();
        let reference = match self.limit(spec, alpha + beta, engine.config().branch_eps) {
            Limit::Regular => engine.lct_direct(&self.family_params(spec, alpha + beta)?, f, &pts)?,
            lim => {
                let prep = engine.prepare(f)?;
                let sign = if lim == Limit::Parity { -1.0 } else { 1.0 };
                let pts: alloc::vec::Vec<f64> = pts.iter().map(|u| sign * u).collect();
                engine.evaluate(&prep, &pts)?
            }
        };
        let diff = SampledSignal::new(*g2.grid(), g2.values().iter().zip(&reference).map(|(a, b)| a - b).collect())?;
        let denom = f.l2_norm();
        if denom == 0.0 {
            return Ok(diff.l2_norm());
        }
        Ok(diff.l2_norm() / denom)
    }
}

/// `(cot ωα, csc ωα)`, `(1/α, 1/α)` or `(coth ωα, csch ωα)`.
fn core_entries(spec: &SubgroupSpec, alpha: f64) -> (f64, f64) {
    match spec.family {
        Family::I => {
            let x = spec.omega * alpha;
            (1.0 / tan(x), 1.0 / sin(x))
        }
        Family::II => (1.0 / alpha, 1.0 / alpha),
        Family::III => {
            let x = spec.omega * alpha;
            (cosh(x) / sinh(x), 1.0 / sinh(x))
        }
    }
}

pub fn family_params(spec: &SubgroupSpec, alpha: f64) -> Result<LctParams> {
    Algebra::default().family_params(spec, alpha)
}

pub fn compose(q: &LctParams, p: &LctParams) -> Result<LctParams> {
    Algebra::default().compose(q, p)
}

pub fn group_residual(spec: &SubgroupSpec, alpha: f64, beta: f64) -> Result<GroupResidual> {
    Algebra::default().group_residual(spec, alpha, beta)
}

pub fn d_solution(spec: &SubgroupSpec, alpha: f64) -> Result<Complex64> {
    Algebra::default().d_solution(spec, alpha)
}

pub fn operator_group_check(spec: &SubgroupSpec, alpha: f64, beta: f64, f: &SampledSignal) -> Result<f64> {
    Algebra::default().operator_group_check(&Engine::default(), spec, alpha, beta, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn_entries() {
        let p = family_params(&SubgroupSpec::frft(), PI / 2.0).unwrap();
        assert!(p.a.abs() < 1e-15 && p.c.abs() < 1e-15 && (p.b - 1.0).abs() < 1e-15);
        let h = family_params(&SubgroupSpec::new(Family::III, 1.0, 1.0, 0.0).unwrap(), 1.0).unwrap();
        assert!((h.a - 1.313035285499331).abs() < 1e-12);
        assert!((h.b - 0.8509181282393216).abs() < 1e-12);
    }

    #[test]
    fn pole_is_degenerate() {
        let s = SubgroupSpec::frft();
        assert!(matches!(group_residual(&s, 0.3, PI - 0.3), Err(crate::Error::Degenerate(_))));
        let e = SubgroupSpec::new(Family::II, 0.0, 1.0, 0.0).unwrap();
        assert!(matches!(family_params(&e, 0.0), Err(crate::Error::Degenerate(_))));
    }

    #[test]
    fn compose_rejects_vanishing_denominator() {
        let p = LctParams::unitary(1.0, 1.0, 0.0).unwrap();
        let q = LctParams::unitary(0.0, 1.0, -1.0).unwrap();
        assert!(matches!(compose(&q, &p), Err(crate::Error::Degenerate(_))));
    }
}
