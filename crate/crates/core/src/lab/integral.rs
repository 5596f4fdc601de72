use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::report::ExperimentReport;
use crate::error::{bail, Result};
use crate::math::{ceil, cis, fabs, pow, sqrt};

const MAX_SAMPLES: f64 = (1u64 << 28) as f64;

/// Trapezoid value of `∫_{-N}^{N} (1+ξ²)^{-1/4} e^{i(aξ² + bξ)} dξ`.
///
/// The step resolves the fastest period `2π/(2|a|N + |b|)` with at least 16
/// samples and is never above `1/16`.
pub fn oscillatory_integral(a: f64, b: f64, n_limit: f64) -> Result<Complex64> {
    if !(a.is_finite() && b.is_finite() && n_limit.is_finite()) {
        bail!(InvalidParameter, "a, b and N must be finite");
    }
    if a == 0.0 && b == 0.0 {
        bail!(InvalidParameter, "(a, b) = (0, 0): the bound degenerates");
    }
    if !(n_limit > 0.0) {
        bail!(InvalidParameter, "N must be positive, got {n_limit}");
    }
    if b != 0.0 {
        let need = (1.0 / sqrt(fabs(b))).max(1.0 / fabs(b));
        if n_limit <= need {
            bail!(InvalidParameter, "N = {n_limit} must exceed max(|b|^-1/2, |b|^-1) = {need}");
        }
    }
    let period = 2.0 * PI / (2.0 * fabs(a) * n_limit + fabs(b));
    let h_max = (period / 16.0).min(1.0 / 16.0);
    let steps = ceil(2.0 * n_limit / h_max);
    if steps > MAX_SAMPLES {
        bail!(AliasingRisk, "oscillation needs {steps} samples, above the limit {MAX_SAMPLES}");
    }
    let steps = steps as usize;
    let h = 2.0 * n_limit / steps as f64;
    let f = |x: f64| cis(a * x * x + b * x) * pow(1.0 + x * x, -0.25);
    let terms: Vec<Complex64> = (0..=steps)
        .map(|j| {
            let w = if j == 0 || j == steps { 0.5 } else { 1.0 };
            f(-n_limit + j as f64 * h) * w
        })
        .collect();
    Ok(crate::math::pairwise_sum(&terms) * h)
}

/// `|I|·(a² + b²)^{1/4}`.
pub fn normalized_ratio(a: f64, b: f64, value: Complex64) -> f64 {
    value.norm() * pow(a * a + b * b, 0.25)
}

pub fn oscillatory_integral_check(a: f64, b: f64, n_limit: f64) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new("lemma-integral", &["a", "b", "N", "re", "im", "abs", "ratio"]);
    let v = oscillatory_integral(a, b, n_limit)?;
    let r = normalized_ratio(a, b, v);
    rep.push_row(alloc::vec![a.into(), b.into(), n_limit.into(), v.re.into(), v.im.into(), v.norm().into(), r.into()])?;
    rep.set_scalar("ratio", r);
    Ok(rep)
}

pub const LATTICE_VALUES: [f64; 6] = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0];

/// Normalized ratios over `a, b ∈ LATTICE_VALUES`, `(a, b) ≠ (0, 0)`, for each
/// `N`. Sign flips are omitted: `a → -a` with `b → -b` conjugates the
/// integral and `b → -b` alone leaves it unchanged.
pub fn oscillatory_integral_lattice(n_limits: &[f64]) -> Result<ExperimentReport> {
    if n_limits.is_empty() {
        bail!(InvalidParameter, "need at least one N");
    }
    let mut rep = ExperimentReport::new("lemma-integral", &["a", "b", "N", "re", "im", "abs", "ratio"]);
    let mut maxima = Vec::with_capacity(n_limits.len());
    let mut per_pair: Vec<Vec<f64>> = Vec::new();
    for &n in n_limits {
        let mut max: f64 = 0.0;
        let mut ratios = Vec::new();
        for &a in &LATTICE_VALUES {
            for &b in &LATTICE_VALUES {
                if a == 0.0 && b == 0.0 {
                    continue;
                }
                let v = oscillatory_integral(a, b, n)?;
                let r = normalized_ratio(a, b, v);
                max = max.max(r);
                ratios.push(r);
                rep.push_row(alloc::vec![
                    a.into(),
                    b.into(),
                    n.into(),
                    v.re.into(),
                    v.im.into(),
                    v.norm().into(),
                    r.into()
                ])?;
            }
        }
        rep.set_scalar(&alloc::format!("max_ratio:N={n}"), max);
        maxima.push(max);
        per_pair.push(ratios);
    }
    let finite = maxima.iter().all(|m| m.is_finite());
    let hi = maxima.iter().fold(0.0, |x: f64, &y| x.max(y));
    let lo = maxima.iter().fold(f64::INFINITY, |x, &y| x.min(y));
    let mut worst: f64 = 1.0;
    for w in per_pair.windows(2) {
        for (x, y) in w[0].iter().zip(&w[1]) {
            worst = worst.max(x / y).max(y / x);
        }
    }
    rep.set_scalar("max_ratio_spread", hi / lo);
    rep.set_scalar("worst_pair_spread", worst);
    rep.set_flag("max_finite", finite);
    rep.set_flag("max_stable", finite && hi < 2.0 * lo);
    rep.note("trapezoid rule with at least 16 samples per fastest period and step at most 1/16");
    Ok(rep)
}
