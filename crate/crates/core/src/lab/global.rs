use alloc::vec::Vec;

use num_complex::Complex64;

use super::fit::power_fit;
use super::maximal::{geometric_a_grid, lp_norm};
use super::report::ExperimentReport;
use crate::error::{bail, Result};
use crate::lct::{linear_phase_sum, BProfile, ProfileKind};
use crate::math::{ceil, cis, cos, fabs, pow, round, sqrt, TWO_PI};

#[derive(Debug, Clone)]
pub struct GlobalProbeConfig {
    pub ladder: Vec<f64>,
    pub s: f64,
    pub p: f64,
    pub profile: BProfile,
    /// Geometric `a` points added to the per-point `ã(u)`.
    pub a_count: usize,
    /// Extra `u` range on each side of `F`.
    pub margin: f64,
    pub u_step: f64,
}

impl Default for GlobalProbeConfig {
    fn default() -> Self {
        Self {
            ladder: (4..=10).map(|j| (1u32 << j) as f64).collect(),
            s: 0.25,
            p: 4.0,
            profile: BProfile::new(ProfileKind::SqrtOnePlusA2, 0.0, 0.5).expect("valid"),
            a_count: 13,
            margin: 10.0,
            u_step: 0.05,
        }
    }
}

/// Simpson weights for `∫_{-c}^{c} g(ξ) dξ` with `m` (even) intervals.
fn simpson(c: f64, m: usize) -> (f64, Vec<f64>) {
    let h = 2.0 * c / m as f64;
    let w = (0..=m)
        .map(|k| {
            let r = if k == 0 || k == m {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            r * h / 3.0
        })
        .collect();
    (h, w)
}

/// `L_a f₀(u) = (2π)^{-1/2} ∫_{-c}^{c} e^{i(b(a)uξ + aξ² + Nξ)} dξ` for
/// `f̂₀ = e^{iNξ}χ_{(-c,c)}`.
struct Probe {
    c: f64,
    h: f64,
    w: Vec<f64>,
}

impl Probe {
    fn new(c: f64, beta_max: f64, a_max: f64) -> Self {
        let rate = beta_max + 2.0 * a_max * c;
        let h_max = (TWO_PI / rate / 16.0).min(c / 64.0);
        let mut m = ceil(2.0 * c / h_max) as usize;
        m += m % 2;
        let (h, w) = simpson(c, m);
        Self { c, h, w }
    }

    fn eval(&self, a: f64, beta: f64) -> Complex64 {
        let terms: Vec<Complex64> = self
            .w
            .iter()
            .enumerate()
            .map(|(k, &w)| {
                let x = -self.c + k as f64 * self.h;
                cis(a * x * x) * w
            })
            .collect();
        linear_phase_sum(&terms, -self.c, self.h, beta) / sqrt(TWO_PI)
    }
}

/// `(∫ (1+ξ²)^s |e^{iNξ}|² dξ)^{1/2}` over `(-c, c)` by Simpson.
fn hs_norm(c: f64, n: f64, s: f64) -> f64 {
    let m = 1 << 14;
    let (h, w) = simpson(c, m);
    let v: f64 = w
        .iter()
        .enumerate()
        .map(|(k, &w)| {
            let x = -c + k as f64 * h;
            w * pow(1.0 + x * x, s) * cis(n * x).norm_sqr()
        })
        .sum();
    sqrt(v)
}

/// Bisection for `b(ã) = target` on the profile interval.
fn solve_a(profile: &BProfile, target: f64) -> Option<f64> {
    let (mut lo, mut hi) = profile.interval();
    let (flo, fhi) = (profile.eval(lo) - target, profile.eval(hi) - target);
    if !(flo * fhi < 0.0) {
        return None;
    }
    let rising = fhi > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (profile.eval(mid) - target > 0.0) == rising {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let a = 0.5 * (lo + hi);
    (a > profile.interval().0 && a < profile.interval().1).then_some(a)
}

/// `‖L_* f₀‖_{L^p} / ‖f₀‖_{H^s}` along the ladder for the modulated indicator
/// `f̂₀ = e^{iNξ}χ_{(-c,c)}`, `c = (a₀+δ)^{-1/2}`, together with the pointwise
/// witness `|L_{ã(u)} f₀(u)|` on `F = {-N/x : x ∈ range b}`.
pub fn global_unboundedness_probe(cfg: &GlobalProbeConfig) -> Result<ExperimentReport> {
    let p = &cfg.profile;
    if p.is_constant() {
        bail!(Inapplicable, "profile {} has constant b; its range has measure zero", p.name());
    }
    let (a0, a1) = p.interval();
    if !(a1 > 0.0) {
        bail!(InvalidParameter, "profile interval must end at a positive a");
    }
    if !(cfg.s > 0.0 && cfg.p >= 1.0 && cfg.p.is_finite()) {
        bail!(InvalidParameter, "need s > 0 and 1 <= p < inf");
    }
    if cfg.ladder.len() < 2 || cfg.ladder.iter().any(|&n| !(n > 0.0)) {
        bail!(InvalidParameter, "need at least two positive scales");
    }
    if !(cfg.u_step > 0.0 && cfg.margin >= 0.0) {
        bail!(InvalidParameter, "u_step must be positive and margin nonnegative");
    }
    let c = 1.0 / sqrt(a1);
    let (b_lo, b_hi) = {
        let (x, y) = (p.eval(a0), p.eval(a1));
        (x.min(y), x.max(y))
    };
    if !(b_lo > 0.0) {
        bail!(Inapplicable, "the witness set needs b > 0 on the profile interval");
    }
    let mut a_grid = geometric_a_grid(p, cfg.a_count);
    a_grid.retain(|&a| a > a0 && a < a1);

    let mut rep = ExperimentReport::new(
        "global-probe",
        &["N", "lp_lstar", "hs_norm", "ratio", "witness_min", "witness_points", "u_points"],
    );
    let mut ratios = Vec::new();
    let mut hs_values = Vec::new();
    let mut witness_min = f64::INFINITY;
    let floor = 2.0 * cos(1.0) - 0.05;
    for &n in &cfg.ladder {
        let hs = hs_norm(c, n, cfg.s);
        let f_lo = -n / b_lo;
        let f_hi = -n / b_hi;
        let (u_lo, u_hi) = (f_lo.min(f_hi) - cfg.margin, f_lo.max(f_hi) + cfg.margin);
        let count = round((u_hi - u_lo) / cfg.u_step) as usize;
        let u: Vec<f64> = (0..=count).map(|k| u_lo + k as f64 * cfg.u_step).collect();
        let beta_max =
            [u_lo, u_hi].iter().flat_map(|&x| [b_lo * x + n, b_hi * x + n]).fold(0.0, |m: f64, v| m.max(fabs(v)));
        let probe = Probe::new(c, beta_max, fabs(a0).max(fabs(a1)));
        let mut lstar = Vec::with_capacity(u.len());
        let mut wmin = f64::INFINITY;
        let mut wcount = 0usize;
        for &x in &u {
            let mut m: f64 = 0.0;
            for &a in &a_grid {
                m = m.max(probe.eval(a, p.eval(a) * x + n).norm());
            }
            if x < 0.0 {
                if let Some(at) = solve_a(p, -n / x) {
                    let v = probe.eval(at, p.eval(at) * x + n).norm();
                    m = m.max(v);
                    wmin = wmin.min(v);
                    wcount += 1;
                }
            }
            lstar.push(m);
        }
        let lp = lp_norm(&u, &lstar, cfg.p);
        let ratio = lp / hs;
        witness_min = witness_min.min(wmin);
        ratios.push(ratio);
        hs_values.push(hs);
        rep.push_row(alloc::vec![
            n.into(),
            lp.into(),
            hs.into(),
            ratio.into(),
            wmin.into(),
            (wcount as i64).into(),
            (u.len() as i64).into(),
        ])?;
    }
    let fit = power_fit(&cfg.ladder, &ratios)?;
    let hs_hi = hs_values.iter().fold(0.0, |m: f64, &v| m.max(v));
    let hs_lo = hs_values.iter().fold(f64::INFINITY, |m, &v| m.min(v));
    rep.set_scalar("witness_min", witness_min);
    rep.set_scalar("witness_floor", floor);
    rep.set_scalar("hs_variation", (hs_hi - hs_lo) / hs_lo);
    rep.set_flag("witness_bound", witness_min >= floor);
    rep.set_flag("ratio_increasing", ratios.windows(2).all(|w| w[1] > w[0]));
    rep.set_flag("exponent_in_range", (0.15..=0.35).contains(&fit.exponent));
    rep.set_flag("hs_invariant", (hs_hi - hs_lo) / hs_lo < 1e-10);
    rep.add_curve("ratio", "N", "ratio", cfg.ladder.iter().copied().zip(ratios).collect());
    rep.set_fit("ratio", fit);
    rep.note("weak L^{1,∞} replaced by L^p over the u grid (trapezoid)");
    rep.note("L_* takes the max over a geometric a grid together with ã(u) solving b(ã)u + N = 0");
    Ok(rep)
}
