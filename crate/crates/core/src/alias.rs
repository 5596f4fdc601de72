use num_complex::Complex64;

use crate::error::{bail, Result};

/// Thresholds on the relative magnitude a signal may keep near the edges of
/// its grid before a transform of it is considered aliased.
///
/// The measured quantity is the largest sample magnitude in the outer
/// `N/32` samples at either end, divided by the largest magnitude overall.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct AliasPolicy {
    /// Above this ratio a warning is logged.
    pub warn: f64,
    /// Above this ratio the operation fails with [`crate::Error::AliasingRisk`].
    pub error: f64,
}

impl Default for AliasPolicy {
    fn default() -> Self {
        Self { warn: 1e-8, error: 1e-4 }
    }
}

impl AliasPolicy {
    /// Never fails; still warns.
    pub fn permissive() -> Self {
        Self { warn: 1e-8, error: f64::INFINITY }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.warn >= 0.0 && self.error >= self.warn) {
            bail!(InvalidParameter, "alias thresholds must satisfy 0 <= warn <= error");
        }
        Ok(())
    }

    pub(crate) fn check(&self, values: &[Complex64], what: &str) -> Result<f64> {
        let ratio = edge_ratio(values);
        if ratio > self.error {
            bail!(AliasingRisk, "{what}: edge magnitude ratio {ratio:.3e} exceeds {:.1e}", self.error);
        }
        if ratio > self.warn {
            log::warn!("{what}: edge magnitude ratio {ratio:.3e} exceeds {:.1e}", self.warn);
        }
        Ok(ratio)
    }
}

pub(crate) fn edge_ratio(values: &[Complex64]) -> f64 {
    let n = values.len();
    let peak = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if peak == 0.0 {
        return 0.0;
    }
    let w = (n / 32).max(1);
    let edge = values[..w].iter().chain(&values[n - w..]).map(|v| v.norm()).fold(0.0, f64::max);
    edge / peak
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn edge_ratio_of_centred_spike_is_zero() {
        let mut v = vec![Complex64::new(0.0, 0.0); 64];
        v[32] = Complex64::new(1.0, 0.0);
        assert_eq!(edge_ratio(&v), 0.0);
        v[0] = Complex64::new(0.5, 0.0);
        assert_eq!(edge_ratio(&v), 0.5);
        assert!(AliasPolicy::default().check(&v, "test").is_err());
        assert!(AliasPolicy::permissive().check(&v, "test").is_ok());
    }
}
