use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::fit::power_fit;
use super::report::{Cell, ExperimentReport};
use crate::error::{bail, Result};
use crate::fixtures::Fixture;
use crate::grid::Grid;
use crate::lct::{Engine, Path};
use crate::math::{cosh, fabs, pow, sqrt};
use crate::norm::NormSpec;
use crate::signal::SampledSignal;

/// A real function of the sweep parameter `α`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum ScalarProfile {
    Constant {
        value: f64,
    },
    /// `offset + slope·α`
    Affine {
        offset: f64,
        slope: f64,
    },
    /// `before` for `α <= at`, `after` for `α > at`.
    Jump {
        before: f64,
        after: f64,
        at: f64,
    },
    /// Piecewise-linear through `(alpha[i], value[i])`, constant outside.
    Tabulated {
        alpha: Vec<f64>,
        value: Vec<f64>,
    },
}

impl ScalarProfile {
    pub fn validate(&self) -> Result<()> {
        match self {
            ScalarProfile::Tabulated { alpha, value } => {
                if alpha.is_empty() || alpha.len() != value.len() {
                    bail!(InvalidParameter, "tabulated profile needs matching, nonempty alpha/value lists");
                }
                if alpha.windows(2).any(|w| !(w[0] < w[1])) {
                    bail!(InvalidParameter, "tabulated alpha must be strictly increasing");
                }
            }
            ScalarProfile::Constant { value } if !value.is_finite() => {
                bail!(InvalidParameter, "constant profile must be finite")
            }
            _ => {}
        }
        Ok(())
    }

    pub fn eval(&self, alpha: f64) -> f64 {
        match self {
            ScalarProfile::Constant { value } => *value,
            ScalarProfile::Affine { offset, slope } => offset + slope * alpha,
            ScalarProfile::Jump { before, after, at } => {
                if alpha <= *at {
                    *before
                } else {
                    *after
                }
            }
            ScalarProfile::Tabulated { alpha: xs, value: ys } => {
                if alpha <= xs[0] {
                    return ys[0];
                }
                let last = xs.len() - 1;
                if alpha >= xs[last] {
                    return ys[last];
                }
                let k = xs.partition_point(|&x| x <= alpha) - 1;
                let w = (alpha - xs[k]) / (xs[k + 1] - xs[k]);
                ys[k] * (1.0 - w) + ys[k + 1] * w
            }
        }
    }
}

/// Parameter sweep `α = α₀ + Δα_k` of `G_α` with `D = 1`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(deny_unknown_fields))]
pub struct SweepConfig {
    #[cfg_attr(feature = "serde", serde(rename = "A"))]
    pub a: ScalarProfile,
    #[cfg_attr(feature = "serde", serde(rename = "B"))]
    pub b: ScalarProfile,
    pub alpha0: f64,
    pub steps: Vec<f64>,
    pub signals: Vec<Fixture>,
    pub grid: Grid,
}

impl SweepConfig {
    /// `A = α`, `B ≡ 1`, `α₀ = 0`, steps `0.1·2^{-k}` for `k = 0..12`,
    /// Gaussian on `T = 20, N = 4096`.
    pub fn continuous_default() -> Self {
        Self {
            a: ScalarProfile::Affine { offset: 0.0, slope: 1.0 },
            b: ScalarProfile::Constant { value: 1.0 },
            alpha0: 0.0,
            steps: dyadic_steps(0.1, 12),
            signals: alloc::vec![Fixture::Gaussian],
            grid: Grid::new(20.0, 4096).expect("valid"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.a.validate()?;
        self.b.validate()?;
        if !self.alpha0.is_finite() {
            bail!(InvalidParameter, "alpha0 must be finite");
        }
        if self.steps.is_empty() || self.steps.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
            bail!(InvalidParameter, "steps must be positive and finite");
        }
        if self.steps.windows(2).any(|w| !(w[1] < w[0])) {
            bail!(InvalidParameter, "steps must be strictly decreasing");
        }
        if self.signals.is_empty() {
            bail!(InvalidParameter, "at least one test signal is required");
        }
        for alpha in core::iter::once(self.alpha0).chain(self.steps.iter().map(|s| self.alpha0 + s)) {
            let (a, b) = (self.a.eval(alpha), self.b.eval(alpha));
            if !(a.is_finite() && b.is_finite()) {
                bail!(InvalidParameter, "profiles are not finite at alpha = {alpha}");
            }
            if b == 0.0 {
                bail!(Degenerate, "B vanishes at alpha = {alpha}");
            }
        }
        Ok(())
    }
}

/// `first·2^{-k}`, `k = 0..count`.
pub fn dyadic_steps(first: f64, count: usize) -> Vec<f64> {
    (0..count).map(|k| first / (1u64 << k) as f64).collect()
}

fn l2_on(grid: &Grid, v: &[Complex64]) -> f64 {
    sqrt(grid.spacing() * v.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

/// Relative `L²` gap between `G_{α₀+Δα_k}` and `G_{α₀}` for each step and
/// signal.
///
/// Both operators are summed directly on the grid `t/max(|B|, |B₀|)`; the
/// captured fraction of the Plancherel norm is recorded so window truncation
/// is visible. The necessity bound `√(2π)·|1/√|B| - 1/√|B₀||` is a
/// consequence of Plancherel and holds for every step.
pub fn l2_continuity_sweep(engine: &Engine, cfg: &SweepConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let mut rep = ExperimentReport::new(
        "sweep-l2",
        &["signal", "step", "alpha", "A", "B", "gap", "lower_bound", "capture", "capture0"],
    );
    rep.note("G_alpha f(u) = D ∫ f̂(ξ) e^{i(Aξ² + Buξ)} dξ with D = 1, quadratic coefficient used as given");
    rep.note("assumes A, B continuous at alpha0 with B(alpha0) != 0 for the sufficiency direction");
    let one = Complex64::new(1.0, 0.0);
    let (a0, b0) = (cfg.a.eval(cfg.alpha0), cfg.b.eval(cfg.alpha0));
    let mut violated = false;
    let mut monotone = true;
    let mut halving = true;
    let mut captured = true;
    let mut worst_capture: f64 = 0.0;
    for fx in &cfg.signals {
        let f = fx.sample(cfg.grid)?;
        let prep = engine.prepare(&f)?;
        let nf = f.l2_norm();
        if nf == 0.0 {
            bail!(InvalidSignal, "test signal {} vanishes on the grid", fx.name());
        }
        let mut gaps = Vec::with_capacity(cfg.steps.len());
        let mut base: Option<(f64, Vec<Complex64>)> = None;
        for &step in &cfg.steps {
            let alpha = cfg.alpha0 + step;
            let (a, b) = (cfg.a.eval(alpha), cfg.b.eval(alpha));
            let ug = Grid::new(cfg.grid.half_width() / fabs(b).max(fabs(b0)), cfg.grid.count())?;
            let u: Vec<f64> = ug.points().collect();
            let g = engine.g_alpha_via(&prep, Path::Spectral, a, b, one, &u)?;
            let g0 = match base.take() {
                Some((hw, g0)) if hw == ug.half_width() => g0,
                _ => engine.g_alpha_via(&prep, Path::Spectral, a0, b0, one, &u)?,
            };
            let diff: Vec<Complex64> = g.iter().zip(&g0).map(|(x, y)| x - y).collect();
            let gap = l2_on(&ug, &diff) / nf;
            let bound = sqrt(2.0 * PI) * fabs(1.0 / sqrt(fabs(b)) - 1.0 / sqrt(fabs(b0)));
            let cap = l2_on(&ug, &g) / (sqrt(2.0 * PI / fabs(b)) * nf);
            let cap0 = l2_on(&ug, &g0) / (sqrt(2.0 * PI / fabs(b0)) * nf);
            worst_capture = worst_capture.max(fabs(cap - 1.0)).max(fabs(cap0 - 1.0));
            captured &= fabs(cap - 1.0) <= 1e-6 && fabs(cap0 - 1.0) <= 1e-6;
            violated |= gap < 0.9 * bound;
            gaps.push(gap);
            base = Some((ug.half_width(), g0));
            rep.push_row(alloc::vec![
                Cell::from(fx.name()),
                step.into(),
                alpha.into(),
                a.into(),
                b.into(),
                gap.into(),
                bound.into(),
                cap.into(),
                cap0.into(),
            ])?;
        }
        let mut rises = 0;
        for k in 2..gaps.len() {
            if gaps[k] > gaps[k - 1] * (1.0 + 1e-9) + 1e-14 {
                rises += 1;
            }
        }
        monotone &= rises <= 1;
        for k in 1..gaps.len() {
            let halved = fabs(cfg.steps[k] / cfg.steps[k - 1] - 0.5) < 1e-12;
            if halved && gaps[k - 1] > 1e-12 {
                let r = gaps[k] / gaps[k - 1];
                halving &= (0.25..=1.0).contains(&r);
            }
        }
        if gaps.iter().all(|&g| g > 0.0) {
            rep.set_fit(&alloc::format!("gap:{}", fx.name()), power_fit(&cfg.steps, &gaps)?);
        }
        rep.add_curve(
            &alloc::format!("gap_{}", fx.name()),
            "step",
            "gap",
            cfg.steps.iter().copied().zip(gaps).collect(),
        );
    }
    rep.set_flag("gap_lower_bound_violated", violated);
    rep.set_flag("gap_monotone", monotone);
    rep.set_flag("gap_halving", halving);
    rep.set_flag("window_captured", captured);
    rep.set_scalar("capture_deviation", worst_capture);
    Ok(rep)
}

/// Pointwise behaviour of `G_α f(u)` along a sweep, plus the truncated dual
/// norm `(∫_{-T}^{T} (1+t²)^{-r} dt)^{1/2}` over a ladder of `T`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct DualLadder {
    pub half_widths: Vec<f64>,
}

impl Default for DualLadder {
    /// `T = 2^4 .. 2^16`
    fn default() -> Self {
        Self { half_widths: (4..=16).map(|k| (1u64 << k) as f64).collect() }
    }
}

/// `∫_{-T}^{T} (1+t²)^{-r} dt` by Simpson's rule in `x = asinh t`.
pub fn weight_integral(r: f64, t: f64) -> f64 {
    let x1 = libm::asinh(t);
    let n = 4096;
    let h = x1 / n as f64;
    let g = |x: f64| pow(cosh(x), 1.0 - 2.0 * r);
    let mut s = g(0.0) + g(x1);
    for k in 1..n {
        s += if k % 2 == 1 { 4.0 } else { 2.0 } * g(k as f64 * h);
    }
    2.0 * s * h / 3.0
}

pub fn pointwise_probe(
    engine: &Engine,
    f: &SampledSignal,
    u: f64,
    cfg: &SweepConfig,
    space: NormSpec,
    ladder: &DualLadder,
) -> Result<ExperimentReport> {
    cfg.validate()?;
    space.validate()?;
    let prep = engine.prepare(f)?;
    let one = Complex64::new(1.0, 0.0);
    let mut rep = ExperimentReport::new(
        "pointwise",
        &["step", "alpha", "A", "B", "re", "im", "deviation", "path", "cross_check"],
    );
    let (a0, b0) = (cfg.a.eval(cfg.alpha0), cfg.b.eval(cfg.alpha0));
    let v0 = engine.g_alpha_prepared(&prep, a0, b0, one, &[u])?.0[0];
    rep.set_scalar("u", u);
    rep.set_scalar("value0_re", v0.re);
    rep.set_scalar("value0_im", v0.im);
    let mut devs = Vec::with_capacity(cfg.steps.len());
    for &step in &cfg.steps {
        let alpha = cfg.alpha0 + step;
        let (a, b) = (cfg.a.eval(alpha), cfg.b.eval(alpha));
        let (v, path) = engine.g_alpha_prepared(&prep, a, b, one, &[u])?;
        let v = v[0];
        // The other quadrature, where it resolves, as an independent value.
        let other = match path {
            Path::Spectral if a != 0.0 => engine.g_alpha_via(&prep, Path::Time, a, b, one, &[u]).ok(),
            Path::Time => engine.g_alpha_via(&prep, Path::Spectral, a, b, one, &[u]).ok(),
            _ => None,
        };
        let cross = other.map_or(f64::NAN, |o| (o[0] - v).norm());
        let dev = (v - v0).norm();
        devs.push(dev);
        let path_name = if path == Path::Spectral { "spectral" } else { "time" };
        rep.push_row(alloc::vec![
            step.into(),
            alpha.into(),
            a.into(),
            b.into(),
            v.re.into(),
            v.im.into(),
            dev.into(),
            path_name.into(),
            cross.into(),
        ])?;
    }
    let first = devs[0];
    let last = *devs.last().unwrap();
    rep.set_flag("deviation_vanishing", last <= 1e-2 * first || last <= 1e-10);
    if devs.iter().all(|&d| d > 0.0) && devs.len() >= 2 {
        rep.set_fit("deviation", power_fit(&cfg.steps, &devs)?);
    }
    rep.add_curve("deviation", "step", "deviation", cfg.steps.iter().copied().zip(devs).collect());

    let order = match space {
        NormSpec::L2 => Some(0.0),
        NormSpec::WeightedL2 { r } => Some(r),
        NormSpec::Sobolev { s } => Some(s),
        NormSpec::HolderSeminorm { .. } => None,
    };
    match order {
        Some(r) => {
            let ts = &ladder.half_widths;
            if ts.len() < 2 || ts.windows(2).any(|w| !(w[0] < w[1])) || ts[0] <= 0.0 {
                bail!(InvalidParameter, "dual-norm ladder must be increasing and positive");
            }
            let duals: Vec<f64> = ts.iter().map(|&t| sqrt(weight_integral(r, t))).collect();
            let fit = power_fit(ts, &duals)?;
            let inc: Vec<f64> = duals.windows(2).map(|w| w[1] - w[0]).collect();
            let bounded = *inc.last().unwrap() <= 0.25 * inc[0];
            rep.set_fit("dual_norm", fit);
            rep.set_scalar("dual_order", r);
            rep.set_flag("dual_norm_bounded", bounded);
            rep.set_flag("dual_norm_consistent", bounded == (r > 0.5));
            rep.set_scalar("dual_norm_expected_exponent", if r < 0.5 { 0.5 - r } else { 0.0 });
            rep.add_curve("dual_norm", "T", "dual_norm", ts.iter().copied().zip(duals).collect());
            rep.note(alloc::format!(
                "dual functional (∫_{{-T}}^{{T}} (1+t²)^{{-{r}}} dt)^{{1/2}}: grows without bound iff the order is <= 1/2"
            ));
        }
        None => rep.note("Hölder seminorm has no weighted dual functional; ladder skipped"),
    }
    Ok(rep)
}
