use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::report::ExperimentReport;
use crate::error::{bail, Result};
use crate::fixtures::bump;
use crate::grid::Grid;
use crate::lct::{BProfile, Engine};
use crate::math::{ceil, cis, fabs, floor, sqrt};
use crate::norm::holder;
use crate::signal::SampledSignal;

const SUPPORT: (f64, f64) = (0.25, 0.5);

/// Truncated series `f_K(t) = Σ_{k=1}^{K} √(2a_k) e^{i(b_k u₀ - t)²/(4a_k)} φ(t)`
/// with `a_k = 2^{-k}` and `b_k = b(a_k)`.
#[derive(Debug, Clone)]
pub struct CounterexampleSpec {
    pub k: u32,
    pub u0: f64,
    /// Supported in `[1/4, 1/2]`.
    pub phi: SampledSignal,
    pub profile: BProfile,
}

impl CounterexampleSpec {
    /// `φ = c·bump(8(t - 3/8))` scaled to the requested discrete integral, on
    /// [`counterexample_grid`].
    pub fn standard(k: u32, u0: f64, integral: f64, profile: BProfile) -> Result<Self> {
        let grid = counterexample_grid(k, u0, profile.bound())?;
        let c = phi_scale(&grid, integral);
        let phi = SampledSignal::from_real_fn(grid, |t| c * phi_shape(t))?;
        let spec = Self { k, u0, phi, profile };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k > 40 {
            bail!(InvalidParameter, "K must be in 1..=40, got {}", self.k);
        }
        let m = self.profile.bound();
        if !(self.u0 > 0.0 && self.u0 < 1.0 / (80.0 * m)) {
            bail!(InvalidParameter, "u0 = {} must lie in (0, 1/(80M)) with M = {m}", self.u0);
        }
        let (lo, hi) = self.profile.interval();
        if !(lo == 0.0 && self.profile.contains(0.5)) || hi < 0.5 {
            bail!(InvalidParameter, "profile must cover a_k = 2^-k for k >= 1");
        }
        let g = self.phi.grid();
        for (t, v) in g.points().zip(self.phi.values()) {
            if (t < SUPPORT.0 || t > SUPPORT.1) && *v != Complex64::new(0.0, 0.0) {
                bail!(InvalidSignal, "phi must vanish outside [1/4, 1/2], found {} at t = {t}", v.norm());
            }
        }
        resolution(self.k, self.u0, m, g)
    }

    pub fn a(k: u32) -> f64 {
        1.0 / (1u64 << k) as f64
    }
}

/// `T = 1` and the smallest power-of-two `N` with `π/Δ ≥ 2^K·(1/2 + M u₀)`.
pub fn counterexample_grid(k: u32, u0: f64, bound: f64) -> Result<Grid> {
    let need = (1u64 << k) as f64 * (SUPPORT.1 + bound * u0);
    let mut n = 64usize;
    while PI * n as f64 / 2.0 < need {
        n <<= 1;
    }
    Grid::new(1.0, n)
}

fn resolution(k: u32, u0: f64, m: f64, g: &Grid) -> Result<()> {
    let need = (1u64 << k) as f64 * (SUPPORT.1 + m * u0);
    if g.nyquist() < need {
        bail!(AliasingRisk, "grid Nyquist {} below the fastest chirp margin {need}", g.nyquist());
    }
    Ok(())
}

fn phi_shape(t: f64) -> f64 {
    if t <= SUPPORT.0 || t >= SUPPORT.1 {
        0.0
    } else {
        bump(8.0 * (t - 0.375))
    }
}

fn support_indices(g: &Grid) -> (usize, usize) {
    let d = g.spacing();
    let lo = floor((SUPPORT.0 + g.half_width()) / d) as usize;
    let hi = (ceil((SUPPORT.1 + g.half_width()) / d) as usize).min(g.count() - 1);
    (lo.saturating_sub(1), (hi + 1).min(g.count() - 1))
}

fn phi_scale(g: &Grid, integral: f64) -> f64 {
    let (lo, hi) = support_indices(g);
    let s: f64 = (lo..=hi).map(|j| phi_shape(g.point(j))).sum();
    integral / (s * g.spacing())
}

fn series_term(k: u32, u0: f64, profile: &BProfile, t: f64) -> Complex64 {
    let a = CounterexampleSpec::a(k);
    let x = profile.eval(a) * u0 - t;
    cis(x * x / (4.0 * a)) * sqrt(2.0 * a)
}

fn series(k: u32, u0: f64, profile: &BProfile, t: f64, phi: f64) -> Complex64 {
    if phi == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    (1..=k).map(|j| series_term(j, u0, profile, t)).sum::<Complex64>() * phi
}

pub fn holder_counterexample(spec: &CounterexampleSpec) -> Result<SampledSignal> {
    spec.validate()?;
    let g = *spec.phi.grid();
    let values =
        g.points().zip(spec.phi.values()).map(|(t, p)| series(spec.k, spec.u0, &spec.profile, t, p.re)).collect();
    SampledSignal::new(g, values)
}

/// Discrete `C^{1/2}` seminorm of `f_K` on the standard construction,
/// computed over the support only.
pub fn counterexample_seminorm(k: u32, u0: f64, integral: f64, profile: &BProfile) -> Result<f64> {
    let g = counterexample_grid(k, u0, profile.bound())?;
    let c = phi_scale(&g, integral);
    let (lo, hi) = support_indices(&g);
    let vals: Vec<Complex64> =
        (lo..=hi).map(|j| g.point(j)).map(|t| series(k, u0, profile, t, c * phi_shape(t))).collect();
    Ok(holder(&vals, g.spacing(), 0.5))
}

#[derive(Debug, Clone)]
pub struct CounterexampleConfig {
    pub k: u32,
    pub u0: f64,
    pub integral: f64,
    pub profile: BProfile,
    /// Indices `n` of `a_n` at which `L_{a_n} f_K(u₀)` is evaluated.
    pub orders: Vec<u32>,
    /// Truncation orders compared for seminorm stability.
    pub stability: Vec<u32>,
    /// Lower bound is `threshold·|∫φ|`.
    pub threshold: f64,
}

impl Default for CounterexampleConfig {
    fn default() -> Self {
        Self {
            k: 20,
            u0: 0.01,
            integral: 0.1,
            profile: BProfile::constant_one(),
            orders: (6..=12).collect(),
            stability: alloc::vec![15, 20, 25],
            threshold: 0.5,
        }
    }
}

pub fn counterexample_experiment(engine: &Engine, cfg: &CounterexampleConfig) -> Result<ExperimentReport> {
    if cfg.orders.iter().any(|&n| n == 0 || n > cfg.k) {
        bail!(InvalidParameter, "orders must lie in 1..=K");
    }
    let spec = CounterexampleSpec::standard(cfg.k, cfg.u0, cfg.integral, cfg.profile.clone())?;
    let f = holder_counterexample(&spec)?;
    let prep = engine.prepare(&f)?;
    let bound = cfg.threshold * fabs(cfg.integral);
    let mut rep = ExperimentReport::new("counterexample", &["n", "a_n", "re", "im", "abs", "bound", "path"]);
    let mut held = true;
    let mut min_abs = f64::INFINITY;
    for &n in &cfg.orders {
        let a = CounterexampleSpec::a(n);
        let (v, path) = engine.l_a_prepared(&prep, a, &cfg.profile, &[cfg.u0])?;
        let m = v[0].norm();
        held &= m >= bound;
        min_abs = min_abs.min(m);
        rep.push_row(alloc::vec![
            (n as i64).into(),
            a.into(),
            v[0].re.into(),
            v[0].im.into(),
            m.into(),
            bound.into(),
            alloc::format!("{path:?}").into(),
        ])?;
    }
    let at_u0 = f.interpolate(cfg.u0).norm();
    rep.set_scalar("f_at_u0", at_u0);
    rep.set_scalar("min_abs_l_a", min_abs);
    rep.set_scalar("lower_bound", bound);
    rep.set_scalar("leading_term", fabs(cfg.integral) / sqrt(2.0 * PI));
    rep.set_flag("lower_bound_held", held);
    rep.set_flag("f_vanishes_at_u0", at_u0 <= 1e-12);

    let mut semis = Vec::new();
    for &k in &cfg.stability {
        let s = counterexample_seminorm(k, cfg.u0, cfg.integral, &cfg.profile)?;
        rep.set_scalar(&alloc::format!("seminorm:K={k}"), s);
        semis.push(s);
    }
    if !semis.is_empty() {
        let lo = semis.iter().fold(f64::INFINITY, |a, &b| a.min(b));
        let hi = semis.iter().fold(0.0, |a: f64, &b| a.max(b));
        rep.set_scalar("seminorm_spread", hi / lo - 1.0);
        rep.set_flag("seminorm_stable", hi <= 1.1 * lo);
    }

    let phi_max = spec.phi.max_abs();
    let next = CounterexampleSpec::a(cfg.k + 1);
    let tail = f
        .grid()
        .points()
        .zip(spec.phi.values())
        .map(|(t, p)| (series_term(cfg.k + 1, cfg.u0, &cfg.profile, t) * p.re).norm())
        .fold(0.0, f64::max);
    let tail_bound = sqrt(2.0 * next) * phi_max;
    rep.set_scalar("uniform_tail", tail);
    rep.set_scalar("uniform_tail_bound", tail_bound);
    rep.set_flag("uniform_tail", tail <= tail_bound * (1.0 + 1e-12));
    rep.note("the k = n term alone contributes |∫φ|/√(2π) to |L_{a_n} f_K(u₀)|");
    rep.note("seminorm is the dyadic-separation lower estimate over the support");
    Ok(rep)
}
