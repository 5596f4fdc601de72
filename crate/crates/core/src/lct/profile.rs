use alloc::string::{String, ToString};

use crate::error::{bail, Result};
use crate::math::{fabs, sqrt};

/// Closed-form choices of `b(a)`.
#[derive(Debug, Clone, Copy)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum ProfileKind {
    /// `b ≡ 1`
    ConstantOne,
    /// `b = 1 + slope·a`
    Linear { slope: f64 },
    /// `b = √(1 + a²)`
    SqrtOnePlusA2,
    /// `b = √(1 + 4a²)`
    SqrtOnePlus4A2,
    /// Caller-supplied `b` with its declared constants.
    #[cfg_attr(feature = "serde", serde(skip))]
    Custom { eval: fn(f64) -> f64, lipschitz: f64, bound: f64 },
}

/// The function `b(a)` of the limit operator, restricted to `[a₀, a₀+δ]`.
#[derive(Debug, Clone)]
pub struct BProfile {
    name: String,
    kind: ProfileKind,
    start: f64,
    end: f64,
}

impl BProfile {
    pub fn new(kind: ProfileKind, start: f64, end: f64) -> Result<Self> {
        if !(start.is_finite() && end.is_finite() && start < end) {
            bail!(InvalidParameter, "profile interval must satisfy a0 < a0 + delta, got ({start}, {end})");
        }
        if let ProfileKind::Linear { slope } = kind {
            if !slope.is_finite() {
                bail!(InvalidParameter, "profile slope must be finite");
            }
        }
        if let ProfileKind::Custom { lipschitz, bound, .. } = kind {
            if !(lipschitz >= 0.0 && bound > 0.0) {
                bail!(InvalidParameter, "custom profile needs lipschitz >= 0 and bound > 0");
            }
        }
        let name = match kind {
            ProfileKind::ConstantOne => "constant-one".to_string(),
            ProfileKind::Linear { slope } => alloc::format!("linear({slope})"),
            ProfileKind::SqrtOnePlusA2 => "sqrt(1+a^2)".to_string(),
            ProfileKind::SqrtOnePlus4A2 => "sqrt(1+4a^2)".to_string(),
            ProfileKind::Custom { .. } => "custom".to_string(),
        };
        let p = Self { name, kind, start, end };
        if p.bound() == 0.0 || !p.bound().is_finite() {
            bail!(InvalidParameter, "profile bound must be positive and finite");
        }
        Ok(p)
    }

    /// `b ≡ 1` on `(0, 1]`.
    pub fn constant_one() -> Self {
        Self::new(ProfileKind::ConstantOne, 0.0, 1.0).expect("valid")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    /// `(a₀, a₀ + δ)`
    pub fn interval(&self) -> (f64, f64) {
        (self.start, self.end)
    }

    pub fn eval(&self, a: f64) -> f64 {
        match self.kind {
            ProfileKind::ConstantOne => 1.0,
            ProfileKind::Linear { slope } => 1.0 + slope * a,
            ProfileKind::SqrtOnePlusA2 => sqrt(1.0 + a * a),
            ProfileKind::SqrtOnePlus4A2 => sqrt(1.0 + 4.0 * a * a),
            ProfileKind::Custom { eval, .. } => eval(a),
        }
    }

    fn reach(&self) -> f64 {
        fabs(self.start).max(fabs(self.end))
    }

    /// Lipschitz constant of `b` on the declared interval.
    pub fn lipschitz(&self) -> f64 {
        let m = self.reach();
        match self.kind {
            ProfileKind::ConstantOne => 0.0,
            ProfileKind::Linear { slope } => fabs(slope),
            ProfileKind::SqrtOnePlusA2 => m / sqrt(1.0 + m * m),
            ProfileKind::SqrtOnePlus4A2 => 4.0 * m / sqrt(1.0 + 4.0 * m * m),
            ProfileKind::Custom { lipschitz, .. } => lipschitz,
        }
    }

    /// `M` with `|b(a)| <= M` on the declared interval.
    pub fn bound(&self) -> f64 {
        let m = self.reach();
        match self.kind {
            ProfileKind::ConstantOne => 1.0,
            ProfileKind::Linear { .. } => fabs(self.eval(self.start)).max(fabs(self.eval(self.end))),
            ProfileKind::SqrtOnePlusA2 => sqrt(1.0 + m * m),
            ProfileKind::SqrtOnePlus4A2 => sqrt(1.0 + 4.0 * m * m),
            ProfileKind::Custom { bound, .. } => bound,
        }
    }

    /// `b` at the left end of the interval.
    pub fn start_value(&self) -> f64 {
        self.eval(self.start)
    }

    /// `a₀ = 0` and `b(0) = 1`, so that `L_a → I` is the expected limit.
    pub fn is_identity_limit(&self) -> bool {
        self.start == 0.0 && fabs(self.eval(0.0) - 1.0) < 1e-15
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.kind, ProfileKind::ConstantOne | ProfileKind::Linear { slope: 0.0 })
    }

    /// Whether `a` lies in `[a₀, a₀+δ]` (the closed interval, so geometric
    /// grids may include the right end).
    pub fn contains(&self, a: f64) -> bool {
        a >= self.start && a <= self.end
    }

    /// Largest difference quotient of `b` over `samples + 1` equispaced points
    /// of the interval; fails if it exceeds the declared constant.
    pub fn check_lipschitz(&self, samples: usize) -> Result<f64> {
        let n = samples.max(2);
        let h = (self.end - self.start) / n as f64;
        let mut worst: f64 = 0.0;
        let mut prev = self.eval(self.start);
        for k in 1..=n {
            let b = self.eval(self.start + k as f64 * h);
            if !b.is_finite() {
                bail!(InvalidParameter, "profile {} is not finite on its interval", self.name);
            }
            worst = worst.max(fabs(b - prev) / h);
            prev = b;
        }
        let l = self.lipschitz();
        if worst > l * (1.0 + 1e-9) + 1e-12 {
            bail!(InvalidParameter, "profile {} has slope {worst} above its declared constant {l}", self.name);
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declared_constants_hold() {
        for kind in [
            ProfileKind::ConstantOne,
            ProfileKind::Linear { slope: -0.5 },
            ProfileKind::SqrtOnePlusA2,
            ProfileKind::SqrtOnePlus4A2,
        ] {
            let p = BProfile::new(kind, 0.0, 0.5).unwrap();
            p.check_lipschitz(1000).unwrap();
            for k in 0..=100 {
                assert!(fabs(p.eval(k as f64 * 0.005)) <= p.bound() + 1e-15);
            }
            assert!(p.is_identity_limit());
        }
    }

    #[test]
    fn understated_lipschitz_is_caught() {
        let p = BProfile::new(ProfileKind::Custom { eval: |a| 1.0 + 3.0 * a, lipschitz: 1.0, bound: 4.0 }, 0.0, 1.0)
            .unwrap();
        assert!(p.check_lipschitz(10).is_err());
    }

    #[test]
    fn rejects_empty_interval() {
        assert!(BProfile::new(ProfileKind::ConstantOne, 0.5, 0.5).is_err());
    }
}
