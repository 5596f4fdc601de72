//! Truncated-domain norms and the discrete Hölder seminorm.

use crate::alias::AliasPolicy;
use crate::error::{bail, Result};
use crate::fourier::fourier_with;
use crate::math::{pairwise_sum_real, pow, sqrt};
use crate::signal::SampledSignal;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind"))]
pub enum NormSpec {
    L2,
    /// `(∫ (1+t²)^r |f|² dt)^{1/2}`, `r >= 0`.
    WeightedL2 {
        r: f64,
    },
    /// `(∫ (1+ξ²)^s |f̂|² dξ)^{1/2}`, `s >= 0`.
    Sobolev {
        s: f64,
    },
    /// `sup |f(x)-f(y)|/|x-y|^s` over dyadic separations, `0 < s <= 1`.
    HolderSeminorm {
        s: f64,
    },
}

impl NormSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            NormSpec::L2 => {}
            NormSpec::WeightedL2 { r } if !(r >= 0.0 && r.is_finite()) => {
                bail!(InvalidParameter, "weight exponent r must be >= 0, got {r}")
            }
            NormSpec::Sobolev { s } if !(s >= 0.0 && s.is_finite()) => {
                bail!(InvalidParameter, "Sobolev order s must be >= 0, got {s}")
            }
            NormSpec::HolderSeminorm { s } if !(s > 0.0 && s <= 1.0) => {
                bail!(InvalidParameter, "Hölder order s must lie in (0, 1], got {s}")
            }
            _ => {}
        }
        Ok(())
    }
}

/// Evaluates `spec` on `f` by the periodic trapezoid rule.
///
/// The Sobolev norm goes through [`crate::fourier`] with a permissive alias
/// policy, so a signal that touches its grid edge only logs a warning. The
/// Hölder seminorm looks at pairs `Δ, 2Δ, 4Δ, …` apart and is therefore a
/// lower bound on the sampled seminorm.
pub fn norm(f: &SampledSignal, spec: NormSpec) -> Result<f64> {
    spec.validate()?;
    let d = f.grid().spacing();
    Ok(match spec {
        NormSpec::L2 => weighted(f, |_| 1.0, d),
        NormSpec::WeightedL2 { r } => weighted(f, |t| pow(1.0 + t * t, r), d),
        NormSpec::Sobolev { s } => {
            let fh = fourier_with(f, &AliasPolicy::permissive())?;
            let dx = fh.grid().spacing();
            weighted(&fh, |x| pow(1.0 + x * x, s), dx)
        }
        NormSpec::HolderSeminorm { s } => holder(f.values(), d, s),
    })
}

fn weighted(f: &SampledSignal, w: impl Fn(f64) -> f64, d: f64) -> f64 {
    let terms: alloc::vec::Vec<f64> = f.grid().points().zip(f.values()).map(|(t, v)| w(t) * v.norm_sqr()).collect();
    sqrt(d * pairwise_sum_real(&terms))
}

pub(crate) fn holder(values: &[num_complex::Complex64], d: f64, s: f64) -> f64 {
    let n = values.len();
    let mut best: f64 = 0.0;
    let mut m = 1;
    while m < n {
        let denom = pow(m as f64 * d, s);
        for j in 0..n - m {
            best = best.max((values[j + m] - values[j]).norm() / denom);
        }
        m <<= 1;
    }
    best
}
