use alloc::vec::Vec;

use super::fit::power_fit;
use super::report::ExperimentReport;
use crate::error::{bail, Result};
use crate::grid::Grid;
use crate::lct::{BProfile, Engine, ProfileKind};
use crate::math::{cis, exp, fabs};
use crate::norm::{norm, NormSpec};
use crate::signal::SampledSignal;

#[derive(Debug, Clone)]
pub struct WavepacketConfig {
    /// Dyadic scales `N`.
    pub ladder: Vec<f64>,
    pub s_values: Vec<f64>,
    pub profile: BProfile,
    pub grid: Grid,
    /// Number of witness parameters `a_j = 0.1·2^{-j}/N²`.
    pub witnesses: usize,
}

impl Default for WavepacketConfig {
    fn default() -> Self {
        Self {
            ladder: (4..=9).map(|j| (1u32 << j) as f64).collect(),
            s_values: alloc::vec![0.1, 0.25],
            profile: BProfile::new(ProfileKind::SqrtOnePlusA2, 0.0, 0.5).expect("valid"),
            grid: Grid::new(2.0, 1 << 14).expect("valid"),
            witnesses: 6,
        }
    }
}

/// `Φ_N(y) = N e^{-(Ny)²/2}`.
pub fn packet(grid: Grid, n: f64) -> Result<SampledSignal> {
    SampledSignal::from_real_fn(grid, |y| n * exp(-(n * y) * (n * y) / 2.0))
}

/// `e^{-iNy} Φ_N(y)`.
pub fn modulated_packet(grid: Grid, n: f64) -> Result<SampledSignal> {
    SampledSignal::from_fn(grid, |y| cis(-n * y) * (n * exp(-(n * y) * (n * y) / 2.0)))
}

/// Scaling of `Φ_N` and its modulation, and `|L_a(e^{-iNy}Φ_N)(u)|` at
/// `u = 2aN/b(a)` where the modulation cancels.
pub fn wavepacket_probe(engine: &Engine, cfg: &WavepacketConfig) -> Result<ExperimentReport> {
    if cfg.ladder.len() < 2 || cfg.ladder.iter().any(|&n| !(n > 0.0)) {
        bail!(InvalidParameter, "need at least two positive scales");
    }
    if cfg.s_values.iter().any(|&s| !(s >= 0.0)) {
        bail!(InvalidParameter, "s must be nonnegative");
    }
    if !cfg.profile.is_identity_limit() {
        bail!(Inapplicable, "profile {} does not satisfy a0 = 0, b(0) = 1", cfg.profile.name());
    }
    if cfg.witnesses == 0 {
        bail!(InvalidParameter, "need at least one witness parameter");
    }
    let nmax = cfg.ladder.iter().fold(0.0, |a: f64, &b| a.max(b));
    let d = cfg.grid.spacing();
    if 8.0 / nmax > cfg.grid.half_width() || 2.0 * nmax > cfg.grid.nyquist() / 4.0 || 1.0 / nmax < 4.0 * d {
        bail!(AliasingRisk, "grid {:?} does not resolve packet scale {nmax}", cfg.grid);
    }
    let mut columns = alloc::vec!["N", "witness_max", "witness_min", "l2_phi"];
    let hs_cols: Vec<alloc::string::String> = cfg.s_values.iter().map(|s| alloc::format!("hs:{s}")).collect();
    columns.extend(hs_cols.iter().map(|s| s.as_str()));
    let mut rep = ExperimentReport::new("wavepacket", &columns);

    let mut l2 = Vec::new();
    let mut hs: Vec<Vec<f64>> = alloc::vec![Vec::new(); cfg.s_values.len()];
    let mut witness_ok = true;
    for &n in &cfg.ladder {
        let phi = packet(cfg.grid, n)?;
        let g = modulated_packet(cfg.grid, n)?;
        let prep = engine.prepare(&g)?;
        let mut wmax: f64 = 0.0;
        let mut wmin = f64::INFINITY;
        for j in 0..cfg.witnesses {
            let a = 0.1 / (n * n * (1u64 << j) as f64);
            let u = 2.0 * a * n / cfg.profile.eval(a);
            let v = engine.l_a_prepared(&prep, a, &cfg.profile, &[u])?.0[0].norm();
            wmax = wmax.max(v);
            wmin = wmin.min(v);
        }
        witness_ok &= wmax >= 0.9 * n / 4.0;
        let p2 = norm(&phi, NormSpec::L2)?;
        l2.push(p2);
        let mut row = alloc::vec![n.into(), wmax.into(), wmin.into(), p2.into()];
        for (k, &s) in cfg.s_values.iter().enumerate() {
            let h = norm(&g, NormSpec::Sobolev { s })?;
            hs[k].push(h);
            row.push(h.into());
        }
        rep.push_row(row)?;
    }
    let l2_fit = power_fit(&cfg.ladder, &l2)?;
    rep.set_flag("l2_exponent", fabs(l2_fit.exponent - 0.5) <= 0.05);
    rep.set_fit("l2_phi", l2_fit);
    let mut hs_ok = true;
    for (k, &s) in cfg.s_values.iter().enumerate() {
        let fit = power_fit(&cfg.ladder, &hs[k])?;
        let ok = fit.exponent <= 2.0 * s + 0.5 + 0.1;
        hs_ok &= ok;
        rep.set_flag(&alloc::format!("hs_exponent:s={s}"), ok);
        rep.set_fit(&alloc::format!("hs:s={s}"), fit);
        rep.add_curve(
            &alloc::format!("hs_{s}"),
            "N",
            "hs_norm",
            cfg.ladder.iter().copied().zip(hs[k].clone()).collect(),
        );
    }
    rep.set_flag("hs_exponent", hs_ok);
    rep.set_flag("witness_lower_bound", witness_ok);
    rep.note("packet profile is Gaussian; witness parameters a_j = 0.1·2^-j/N² at u = 2aN/b(a), so the witness set shrinks with N");
    rep.note("L^{1,∞}(E) lower bound is checked pointwise on the witness points");
    Ok(rep)
}
