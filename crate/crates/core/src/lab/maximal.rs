use alloc::vec::Vec;

use super::fit::power_fit;
use super::report::{Cell, ExperimentReport};
use crate::error::{bail, Result};
use crate::fixtures::Fixture;
use crate::grid::Grid;
use crate::lct::{BProfile, Engine, Prepared, ProfileKind};
use crate::math::{fabs, pow, round, sqrt};
use crate::norm::{norm, NormSpec};
use crate::signal::SampledSignal;

/// `L_* f(u) = max_{a ∈ a_grid} |L_a f(u)|` on a set of points, summarised
/// by an `L^p` norm over those points.
#[derive(Debug, Clone)]
pub struct MaximalQuery {
    pub profile: BProfile,
    pub a_grid: Vec<f64>,
    pub u_grid: Vec<f64>,
    /// `p >= 1`, or `f64::INFINITY` for the supremum.
    pub p: f64,
}

impl MaximalQuery {
    pub fn validate(&self) -> Result<()> {
        if self.a_grid.is_empty() || self.u_grid.is_empty() {
            bail!(InvalidParameter, "a_grid and u_grid must be nonempty");
        }
        if let Some(a) = self.a_grid.iter().find(|&&a| !self.profile.contains(a)) {
            let (lo, hi) = self.profile.interval();
            bail!(InvalidParameter, "a = {a} lies outside the profile interval ({lo}, {hi})");
        }
        if self.u_grid.iter().any(|u| !u.is_finite()) {
            bail!(InvalidParameter, "u_grid must be finite");
        }
        if !(self.p >= 1.0) {
            bail!(InvalidParameter, "p must be >= 1, got {}", self.p);
        }
        Ok(())
    }
}

/// `a₀ + δ·2^{-j}`, `j = 0..count`.
pub fn geometric_a_grid(profile: &BProfile, count: usize) -> Vec<f64> {
    let (lo, hi) = profile.interval();
    (0..count).map(|j| lo + (hi - lo) / (1u64 << j) as f64).collect()
}

/// `L_* f` and the maximising parameter `a(u)` at each point.
#[derive(Debug, Clone, PartialEq)]
pub struct MaximalValues {
    pub lstar: Vec<f64>,
    pub argmax: Vec<f64>,
}

pub fn maximal_function(engine: &Engine, q: &MaximalQuery, prep: &Prepared) -> Result<MaximalValues> {
    q.validate()?;
    let mut lstar = alloc::vec![0.0; q.u_grid.len()];
    let mut argmax = alloc::vec![f64::NAN; q.u_grid.len()];
    for &a in &q.a_grid {
        let (vals, _) = engine.l_a_prepared(prep, a, &q.profile, &q.u_grid)?;
        for (k, v) in vals.iter().enumerate() {
            let m = v.norm();
            if m > lstar[k] || argmax[k].is_nan() {
                lstar[k] = m;
                argmax[k] = a;
            }
        }
    }
    Ok(MaximalValues { lstar, argmax })
}

/// Trapezoid `(∫ |g|^p du)^{1/p}` over sorted points; the maximum for
/// `p = ∞`.
pub fn lp_norm(u: &[f64], g: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        return g.iter().fold(0.0, |m, &x| m.max(fabs(x)));
    }
    let mut idx: Vec<usize> = (0..u.len()).collect();
    idx.sort_by(|&i, &j| u[i].total_cmp(&u[j]));
    let mut s = 0.0;
    for w in idx.windows(2) {
        let (i, j) = (w[0], w[1]);
        s += 0.5 * (u[j] - u[i]) * (pow(fabs(g[i]), p) + pow(fabs(g[j]), p));
    }
    pow(s, 1.0 / p)
}

pub fn maximal_estimate(engine: &Engine, q: &MaximalQuery, f: &SampledSignal) -> Result<ExperimentReport> {
    let prep = engine.prepare(f)?;
    let m = maximal_function(engine, q, &prep)?;
    let mut rep = ExperimentReport::new("maximal", &["u", "lstar", "argmax_a", "abs_f"]);
    for (k, &u) in q.u_grid.iter().enumerate() {
        let fu = f.interpolate(u).norm();
        rep.push_row(alloc::vec![u.into(), m.lstar[k].into(), m.argmax[k].into(), fu.into()])?;
    }
    rep.set_scalar("p", q.p);
    rep.set_scalar("lp_norm", lp_norm(&q.u_grid, &m.lstar, q.p));
    rep.set_scalar("sup", m.lstar.iter().fold(0.0, |a: f64, &b| a.max(b)));
    rep.set_scalar("a_points", q.a_grid.len() as f64);
    rep.note("weak L^{1,∞} norm replaced by the L^p norm over u_grid (trapezoid)");
    rep.note("supremum over a is taken over a_grid only and is a lower bound for the continuum");
    rep.add_curve("lstar", "u", "lstar", q.u_grid.iter().copied().zip(m.lstar).collect());
    Ok(rep)
}

/// Growth of `sup_{[-R,R]} L_* f` in `R` for compactly supported `C^{1/2}`
/// signals on `(0, 1)`.
#[derive(Debug, Clone)]
pub struct HolderBoundConfig {
    pub grid: Grid,
    pub profile: BProfile,
    pub a_count: usize,
    pub u_step: f64,
    pub radii: Vec<f64>,
    pub fixtures: Vec<Fixture>,
}

impl Default for HolderBoundConfig {
    /// `T = 16, N = 2^16`, `b = 1 + a/2` on `(0, 1]`, 13 geometric `a`,
    /// `u` spacing `0.02`, `R ∈ {1, 2, 4, 8}`.
    fn default() -> Self {
        Self {
            grid: Grid::new(16.0, 1 << 16).expect("valid"),
            profile: BProfile::new(ProfileKind::Linear { slope: 0.5 }, 0.0, 1.0).expect("valid"),
            a_count: 13,
            u_step: 0.02,
            radii: alloc::vec![1.0, 2.0, 4.0, 8.0],
            fixtures: Fixture::HALF_HOLDER.to_vec(),
        }
    }
}

pub fn holder_maximal_bound(engine: &Engine, cfg: &HolderBoundConfig) -> Result<ExperimentReport> {
    if cfg.radii.len() < 2 || cfg.radii.iter().any(|&r| !(r > 0.0)) {
        bail!(InvalidParameter, "need at least two positive radii");
    }
    if !(cfg.u_step > 0.0) {
        bail!(InvalidParameter, "u_step must be positive");
    }
    let rmax = cfg.radii.iter().fold(0.0, |a: f64, &b| a.max(b));
    let count = round(rmax / cfg.u_step) as i64;
    let u: Vec<f64> = (-count..=count).map(|k| k as f64 * cfg.u_step).collect();
    let q = MaximalQuery {
        profile: cfg.profile.clone(),
        a_grid: geometric_a_grid(&cfg.profile, cfg.a_count),
        u_grid: u.clone(),
        p: f64::INFINITY,
    };
    let mut rep = ExperimentReport::new("maximal", &["signal", "R", "sup_lstar", "seminorm", "constant"]);
    let mut all_ok = true;
    for fx in &cfg.fixtures {
        let f = fx.sample(cfg.grid)?;
        let prep = engine.prepare(&f)?;
        let m = maximal_function(engine, &q, &prep)?;
        let semi = norm(&f, NormSpec::HolderSeminorm { s: 0.5 })?;
        let mut sups = Vec::with_capacity(cfg.radii.len());
        for &r in &cfg.radii {
            let s = u
                .iter()
                .zip(&m.lstar)
                .filter(|(x, _)| fabs(**x) <= r + 1e-12)
                .fold(0.0, |acc: f64, (_, &v)| acc.max(v));
            // (0, 1) has length 1, so the interval factor is 1 + |d - c| = 2.
            let c = s / (sqrt(r) * 2.0 * semi);
            sups.push(s);
            rep.push_row(alloc::vec![Cell::from(fx.name()), r.into(), s.into(), semi.into(), c.into()])?;
        }
        let fit = power_fit(&cfg.radii, &sups)?;
        let ok = (0.0..=0.6).contains(&fit.exponent);
        all_ok &= ok;
        rep.set_flag(&alloc::format!("exponent_in_range:{}", fx.name()), ok);
        rep.set_fit(&alloc::format!("growth:{}", fx.name()), fit);
        rep.add_curve(
            &alloc::format!("sup_{}", fx.name()),
            "R",
            "sup_lstar",
            cfg.radii.iter().copied().zip(sups).collect(),
        );
    }
    rep.set_flag("exponent_in_range", all_ok);
    rep.note("supremum over a taken on a geometric grid; the bound being tested grows like R^{1/2}");
    Ok(rep)
}
