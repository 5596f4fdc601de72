use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::params::LctParams;
use super::profile::BProfile;
use super::quad::{linear_phase_sum, tukey, Span};
use crate::alias::AliasPolicy;
use crate::error::{bail, Result};
use crate::fft::Direction;
use crate::fourier::transform;
use crate::grid::Grid;
use crate::math::{cis, round, sqrt, TWO_PI};
use crate::signal::{active_range, SampledSignal};

/// Samples smaller than this fraction of the peak are skipped by direct sums.
const TRIM: f64 = 2.2e-18;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct EngineConfig {
    pub alias: AliasPolicy,
    /// Orders within this distance of `nπ` use the exact limit `f((-1)ⁿ u)`.
    pub branch_eps: f64,
    /// Tukey taper fraction applied to input samples; `0` is the plain
    /// trapezoid rule.
    pub taper: f64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self { alias: AliasPolicy::default(), branch_eps: 1e-3, taper: 0.0 }
    }
}

/// Which quadrature evaluated `G` at arbitrary points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    /// Sum over the sampled spectrum.
    Spectral,
    /// Sum over the samples with the Gaussian-kernel form of `G`.
    Time,
    /// `a = 0`: linear interpolation of the samples.
    Interpolated,
}

/// Transform evaluator; holds only configuration.
#[derive(Debug, Clone, Default)]
pub struct Engine {
    config: EngineConfig,
}

/// A signal together with its spectrum and the time/frequency intervals
/// that carry its mass, reused across many evaluations.
#[derive(Debug, Clone)]
pub struct Prepared<'a> {
    signal: &'a SampledSignal,
    values: Vec<Complex64>,
    spectrum: SampledSignal,
    time: [Option<Span>; 2],
    band: [Option<Span>; 2],
    t_range: (usize, usize),
    xi_range: (usize, usize),
}

impl<'a> Prepared<'a> {
    pub fn signal(&self) -> &'a SampledSignal {
        self.signal
    }

    /// `f̂` on the reciprocal grid (after tapering).
    pub fn spectrum(&self) -> &SampledSignal {
        &self.spectrum
    }

    /// Interval holding every sample above the error threshold.
    pub fn support(&self) -> Option<(f64, f64)> {
        self.time[0].map(|s| (s.lo, s.hi))
    }

    /// Frequency interval holding every spectral sample above the error
    /// threshold.
    pub fn band(&self) -> Option<(f64, f64)> {
        self.band[0].map(|s| (s.lo, s.hi))
    }

    fn is_zero(&self) -> bool {
        self.time[1].is_none()
    }
}

fn support_span(grid: &Grid, values: &[Complex64], rel: f64) -> Option<Span> {
    let peak = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if peak == 0.0 || !rel.is_finite() {
        return None;
    }
    let cut = rel * peak;
    let lo = values.iter().position(|v| v.norm() > cut)?;
    let hi = values.iter().rposition(|v| v.norm() > cut)?;
    Some(Span::new(grid.point(lo), grid.point(hi)))
}

impl Engine {
    pub fn new(config: EngineConfig) -> Result<Self> {
        config.alias.validate()?;
        if !(config.branch_eps > 0.0 && config.branch_eps < PI / 2.0) {
            bail!(InvalidParameter, "branch_eps must lie in (0, π/2), got {}", config.branch_eps);
        }
        if !(0.0..=1.0).contains(&config.taper) {
            bail!(InvalidParameter, "taper must lie in [0, 1], got {}", config.taper);
        }
        Ok(Self { config })
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    /// Checks that `f` and its spectrum stay clear of their grid edges and
    /// measures where their mass lives.
    pub fn prepare<'a>(&self, f: &'a SampledSignal) -> Result<Prepared<'a>> {
        let policy = &self.config.alias;
        policy.check(f.values(), "signal")?;
        let values: Vec<Complex64> = match tukey(f.len(), self.config.taper) {
            Some(w) => f.values().iter().zip(w).map(|(v, w)| v * w).collect(),
            None => f.values().to_vec(),
        };
        let tapered = SampledSignal::with_grid(*f.grid(), values);
        let spectrum = transform(&tapered, Direction::Forward);
        policy.check(spectrum.values(), "signal spectrum")?;
        let values = tapered.into_values();
        let sg = *spectrum.grid();
        let err_level = if policy.error.is_finite() { policy.error.min(1.0) } else { policy.warn };
        Ok(Prepared {
            signal: f,
            time: [support_span(f.grid(), &values, err_level), support_span(f.grid(), &values, policy.warn)],
            band: [support_span(&sg, spectrum.values(), err_level), support_span(&sg, spectrum.values(), policy.warn)],
            t_range: active_range(&values, TRIM),
            xi_range: active_range(spectrum.values(), TRIM),
            values,
            spectrum,
        })
    }

    /// Whether `need(time, band) <= limit` at the error level. Logs a warning
    /// when it only holds at that level.
    fn resolved(&self, prep: &Prepared, what: &str, limit: f64, need: impl Fn(Span, Span) -> f64) -> bool {
        let at = |k: usize| match (prep.time[k], prep.band[k]) {
            (Some(t), Some(b)) => need(t, b),
            _ => 0.0,
        };
        let strict = at(0);
        if strict > limit {
            return false;
        }
        let loose = at(1);
        if loose > limit {
            log::warn!("{what}: resolution {loose:.4e} exceeds {limit:.4e} at the warning level");
        }
        true
    }

    fn guard(&self, prep: &Prepared, what: &str, limit: f64, need: impl Fn(Span, Span) -> f64) -> Result<()> {
        if !self.resolved(prep, what, limit, &need) {
            let (t, b) = (prep.time[0].unwrap(), prep.band[0].unwrap());
            bail!(AliasingRisk, "{what}: needs {:.4e} but the grid resolves {limit:.4e}", need(t, b));
        }
        Ok(())
    }

    /// `D ∫ e^{i(Au²/2 - But + Ct²/2)} f(t) dt` by the trapezoid rule at each
    /// requested `u`.
    pub fn lct_direct(&self, p: &LctParams, f: &SampledSignal, u: &[f64]) -> Result<Vec<Complex64>> {
        p.validate()?;
        let us = point_span(u)?;
        let prep = self.prepare(f)?;
        let grid = f.grid();
        let limit = TWO_PI / grid.spacing();
        self.guard(&prep, "lct_direct", limit, |t, b| t.scale(p.c).plus(us.scale(-p.b)).plus(b).reach())?;
        let (lo, hi) = prep.t_range;
        let w: Vec<Complex64> = (lo..hi)
            .map(|j| {
                let t = grid.point(j);
                prep.values[j] * cis(p.c * t * t / 2.0)
            })
            .collect();
        let d = grid.spacing();
        let t0 = grid.point(lo);
        Ok(u.iter().map(|&u| p.d * cis(p.a * u * u / 2.0) * d * linear_phase_sum(&w, t0, d, -p.b * u)).collect())
    }

    /// The same transform through `chirp → FFT → chirp`, returned on its
    /// natural grid `u_k = ξ_k / B`.
    pub fn lct_chirp(&self, p: &LctParams, f: &SampledSignal) -> Result<SampledSignal> {
        p.validate()?;
        let prep = self.prepare(f)?;
        let grid = *f.grid();
        self.guard(&prep, "lct_chirp", grid.nyquist(), |t, b| t.scale(p.c).plus(b).reach())?;
        let chirped: Vec<Complex64> =
            grid.points().zip(&prep.values).map(|(t, v)| v * cis(p.c * t * t / 2.0)).collect();
        let gh = transform(&SampledSignal::with_grid(grid, chirped), Direction::Forward);
        let n = grid.count();
        let out_grid = Grid::new(grid.nyquist() / p.b.abs(), n)?;
        let scale = p.d * sqrt(TWO_PI);
        let values = (0..n)
            .map(|k| {
                let u = out_grid.point(k);
                let src = if p.b > 0.0 { k } else { (n - k) % n };
                scale * cis(p.a * u * u / 2.0) * gh.values()[src]
            })
            .collect();
        SampledSignal::new(out_grid, values)
    }

    /// Fractional Fourier transform of order `alpha`.
    pub fn frft(&self, alpha: f64, f: &SampledSignal) -> Result<SampledSignal> {
        if !alpha.is_finite() {
            bail!(InvalidParameter, "fractional order must be finite");
        }
        let n = round(alpha / PI);
        if (alpha - n * PI).abs() <= self.config.branch_eps {
            return Ok(if (n as i64).rem_euclid(2) == 0 { f.clone() } else { f.reflected() });
        }
        self.lct_chirp(&LctParams::frft(alpha)?, f)
    }

    /// `G f(u) = D ∫ f̂(ξ) e^{i(Aξ² + Buξ)} dξ` at arbitrary points.
    pub fn g_alpha(&self, a: f64, b: f64, d: Complex64, f: &SampledSignal, u: &[f64]) -> Result<Vec<Complex64>> {
        let prep = self.prepare(f)?;
        Ok(self.g_alpha_prepared(&prep, a, b, d, u)?.0)
    }

    /// As [`Engine::g_alpha`], also reporting the quadrature used. The
    /// spectral sum is preferred; the time-domain form is the fallback when
    /// `A ≠ 0`.
    pub fn g_alpha_prepared(
        &self,
        prep: &Prepared,
        a: f64,
        b: f64,
        d: Complex64,
        u: &[f64],
    ) -> Result<(Vec<Complex64>, Path)> {
        check_g_params(a, b, d)?;
        let us = point_span(u)?;
        if prep.is_zero() {
            return Ok((alloc::vec![Complex64::new(0.0, 0.0); u.len()], Path::Spectral));
        }
        let grid = prep.signal.grid();
        let spectral_need = |t: Span, x: Span| x.scale(2.0 * a).plus(us.scale(b)).plus(t.scale(-1.0)).reach();
        let spectral_limit = 2.0 * grid.half_width();
        if self.resolved(prep, "g_alpha (spectral)", spectral_limit, spectral_need) {
            return Ok((self.spectral_sum(prep, a, b, d, u), Path::Spectral));
        }
        let time_limit = TWO_PI / grid.spacing();
        let time_need = |t: Span, x: Span| us.scale(b).plus(t.scale(-1.0)).scale(0.5 / a).plus(x).reach();
        if a != 0.0 && self.resolved(prep, "g_alpha (time)", time_limit, time_need) {
            return Ok((self.time_sum(prep, a, b, d, u), Path::Time));
        }
        let (t, x) = (prep.time[0].unwrap(), prep.band[0].unwrap());
        bail!(
            AliasingRisk,
            "g_alpha(A={a}, B={b}): spectral sum needs {:.4e} > {spectral_limit:.4e}{}",
            spectral_need(t, x),
            if a != 0.0 {
                alloc::format!(", time-domain sum needs {:.4e} > {time_limit:.4e}", time_need(t, x))
            } else {
                alloc::string::String::new()
            }
        );
    }

    /// Evaluates `G` with the requested quadrature, failing if that
    /// quadrature does not resolve the integrand.
    pub fn g_alpha_via(
        &self,
        prep: &Prepared,
        path: Path,
        a: f64,
        b: f64,
        d: Complex64,
        u: &[f64],
    ) -> Result<Vec<Complex64>> {
        check_g_params(a, b, d)?;
        let us = point_span(u)?;
        if prep.is_zero() {
            return Ok(alloc::vec![Complex64::new(0.0, 0.0); u.len()]);
        }
        let grid = prep.signal.grid();
        match path {
            Path::Spectral => {
                self.guard(prep, "g_alpha (spectral)", 2.0 * grid.half_width(), |t, x| {
                    x.scale(2.0 * a).plus(us.scale(b)).plus(t.scale(-1.0)).reach()
                })?;
                Ok(self.spectral_sum(prep, a, b, d, u))
            }
            Path::Time => {
                if a == 0.0 {
                    bail!(InvalidParameter, "the time-domain form needs A != 0");
                }
                self.guard(prep, "g_alpha (time)", TWO_PI / grid.spacing(), |t, x| {
                    us.scale(b).plus(t.scale(-1.0)).scale(0.5 / a).plus(x).reach()
                })?;
                Ok(self.time_sum(prep, a, b, d, u))
            }
            Path::Interpolated => bail!(InvalidParameter, "interpolation is not a quadrature for G"),
        }
    }

    fn spectral_sum(&self, prep: &Prepared, a: f64, b: f64, d: Complex64, u: &[f64]) -> Vec<Complex64> {
        let sg = prep.spectrum.grid();
        let (lo, hi) = prep.xi_range;
        let h: Vec<Complex64> = (lo..hi)
            .map(|k| {
                let x = sg.point(k);
                prep.spectrum.values()[k] * cis(a * x * x)
            })
            .collect();
        let dx = sg.spacing();
        let x0 = sg.point(lo);
        u.iter().map(|&u| d * dx * linear_phase_sum(&h, x0, dx, b * u)).collect()
    }

    /// `G f(u) = √(i/2A) D ∫ f(t) e^{-i(Bu-t)²/(4A)} dt`.
    fn time_sum(&self, prep: &Prepared, a: f64, b: f64, d: Complex64, u: &[f64]) -> Vec<Complex64> {
        let grid = prep.signal.grid();
        let (lo, hi) = prep.t_range;
        let w: Vec<Complex64> = (lo..hi)
            .map(|j| {
                let t = grid.point(j);
                prep.values[j] * cis(-t * t / (4.0 * a))
            })
            .collect();
        let dt = grid.spacing();
        let t0 = grid.point(lo);
        let pre = (Complex64::i() / (2.0 * a)).sqrt() * d * dt;
        u.iter()
            .map(|&u| {
                let s = b * u;
                pre * cis(-s * s / (4.0 * a)) * linear_phase_sum(&w, t0, dt, s / (2.0 * a))
            })
            .collect()
    }

    /// `G f` on its natural grid `u_j = t_j / B` through one inverse FFT.
    pub fn g_alpha_natural(&self, a: f64, b: f64, d: Complex64, f: &SampledSignal) -> Result<SampledSignal> {
        check_g_params(a, b, d)?;
        let prep = self.prepare(f)?;
        let grid = *f.grid();
        self.guard(&prep, "g_alpha", grid.half_width(), |t, x| t.plus(x.scale(-2.0 * a)).reach())?;
        let sg = *prep.spectrum.grid();
        let h: Vec<Complex64> = sg.points().zip(prep.spectrum.values()).map(|(x, v)| v * cis(a * x * x)).collect();
        let hv = transform(&SampledSignal::with_grid(sg, h), Direction::Inverse);
        let n = grid.count();
        let out_grid = Grid::new(grid.half_width() / b.abs(), n)?;
        let scale = d * sqrt(TWO_PI);
        let values = (0..n).map(|j| scale * hv.values()[if b > 0.0 { j } else { (n - j) % n }]).collect();
        SampledSignal::new(out_grid, values)
    }

    /// `L_a f(u) = (2π)^{-1/2} ∫ e^{i(b(a)uv + av²)} f̂(v) dv`.
    pub fn l_a(&self, a: f64, profile: &BProfile, f: &SampledSignal, u: &[f64]) -> Result<Vec<Complex64>> {
        let prep = self.prepare(f)?;
        Ok(self.l_a_prepared(&prep, a, profile, u)?.0)
    }

    pub fn l_a_prepared(
        &self,
        prep: &Prepared,
        a: f64,
        profile: &BProfile,
        u: &[f64],
    ) -> Result<(Vec<Complex64>, Path)> {
        if !(a == 0.0 || profile.contains(a)) {
            let (lo, hi) = profile.interval();
            bail!(InvalidParameter, "a = {a} lies outside the profile interval ({lo}, {hi})");
        }
        let b = profile.eval(a);
        if !(b.is_finite() && b != 0.0) {
            bail!(InvalidParameter, "b({a}) = {b} is not a usable dilation");
        }
        if a == 0.0 {
            point_span(u)?;
            return Ok((u.iter().map(|&u| prep.signal.interpolate(b * u)).collect(), Path::Interpolated));
        }
        self.g_alpha_prepared(prep, a, b, Complex64::new(1.0 / sqrt(TWO_PI), 0.0), u)
    }

    /// Band-limited reconstruction of `f(±u)` from its spectrum.
    pub fn evaluate(&self, prep: &Prepared, u: &[f64]) -> Result<Vec<Complex64>> {
        Ok(self.g_alpha_prepared(prep, 0.0, 1.0, Complex64::new(1.0 / sqrt(TWO_PI), 0.0), u)?.0)
    }
}

fn check_g_params(a: f64, b: f64, d: Complex64) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && d.re.is_finite() && d.im.is_finite()) {
        bail!(InvalidParameter, "G parameters must be finite");
    }
    if b == 0.0 {
        bail!(InvalidParameter, "B must be nonzero");
    }
    Ok(())
}

fn point_span(u: &[f64]) -> Result<Span> {
    let mut s = Span::point(0.0);
    let mut first = true;
    for &x in u {
        if !x.is_finite() {
            bail!(InvalidParameter, "evaluation points must be finite");
        }
        s = if first { Span::point(x) } else { Span::new(s.lo.min(x), s.hi.max(x)) };
        first = false;
    }
    Ok(s)
}
