use alloc::vec::Vec;

use super::report::ExperimentReport;
use crate::error::{bail, Result};
use crate::lct::{BProfile, Engine};
use crate::signal::SampledSignal;

/// Points of `f`'s grid inside `[-T/2, T/2]`, thinned to at most `count`.
pub fn default_u_grid(f: &SampledSignal, count: usize) -> Vec<f64> {
    let g = f.grid();
    let inner: Vec<f64> = g.points().filter(|t| t.abs() <= g.half_width() / 2.0).collect();
    let stride = inner.len().div_ceil(count.max(1)).max(1);
    inner.into_iter().step_by(stride).collect()
}

/// For each `a`, the fraction of `u_grid` where `|L_a f(u) - f(u)| > ε`.
///
/// `witness` adds the deviation at one extra point, which may fail to
/// converge while the fraction still tends to zero.
pub fn ae_convergence_fraction(
    engine: &Engine,
    f: &SampledSignal,
    profile: &BProfile,
    a_sequence: &[f64],
    eps: f64,
    u_grid: &[f64],
    witness: Option<f64>,
) -> Result<ExperimentReport> {
    if !profile.is_identity_limit() {
        bail!(Inapplicable, "profile {} does not satisfy a0 = 0, b(0) = 1", profile.name());
    }
    if !(eps > 0.0) {
        bail!(InvalidParameter, "eps must be positive, got {eps}");
    }
    if a_sequence.is_empty() || u_grid.is_empty() {
        bail!(InvalidParameter, "a_sequence and u_grid must be nonempty");
    }
    if a_sequence.windows(2).any(|w| !(w[1] < w[0])) || a_sequence.iter().any(|&a| !(a > 0.0)) {
        bail!(InvalidParameter, "a_sequence must be positive and strictly decreasing");
    }
    let prep = engine.prepare(f)?;
    let reference: Vec<_> = u_grid.iter().map(|&u| f.interpolate(u)).collect();
    let w_ref = witness.map(|u| f.interpolate(u));
    let mut rep = ExperimentReport::new("ae", &["a", "fraction", "max_deviation", "witness_deviation"]);
    let mut fractions = Vec::with_capacity(a_sequence.len());
    for &a in a_sequence {
        let (vals, _) = engine.l_a_prepared(&prep, a, profile, u_grid)?;
        let mut bad = 0usize;
        let mut worst: f64 = 0.0;
        for (v, r) in vals.iter().zip(&reference) {
            let d = (v - r).norm();
            worst = worst.max(d);
            if d > eps {
                bad += 1;
            }
        }
        let wd = match (witness, w_ref) {
            (Some(u), Some(r)) => (engine.l_a_prepared(&prep, a, profile, &[u])?.0[0] - r).norm(),
            _ => f64::NAN,
        };
        let frac = bad as f64 / u_grid.len() as f64;
        fractions.push(frac);
        rep.push_row(alloc::vec![a.into(), frac.into(), worst.into(), wd.into()])?;
    }
    let last = *fractions.last().expect("nonempty");
    rep.set_scalar("eps", eps);
    rep.set_scalar("final_fraction", last);
    rep.set_flag("fraction_nonincreasing_tail", last <= fractions[0]);
    rep.set_flag("fraction_vanishing", last == 0.0);
    rep.add_curve("fraction", "a", "fraction", a_sequence.iter().copied().zip(fractions).collect());
    Ok(rep)
}
