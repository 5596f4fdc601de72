//! Dispatch from a validated config to the library.

use lctkit::lab::{
    counterexample_experiment, geometric_a_grid, global_unboundedness_probe, holder_maximal_bound, l2_continuity_sweep,
    maximal_estimate, oscillatory_integral_check, oscillatory_integral_lattice, pointwise_probe, wavepacket_probe,
    Cell, ExperimentReport, MaximalQuery,
};
use lctkit::lct::{Engine, LctParams};
use lctkit::subgroup::Algebra;
use lctkit::{fourier_with, inverse_fourier_with, Complex64, SampledSignal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{
    AGrid, LemmaParams, MaximalParams, Params, RunConfig, TransformOp, TransformParams, VerifyGroupParams,
};
use crate::error::{CliError, Result};

pub struct Outcome {
    pub report: ExperimentReport,
    /// Grid-valued output of `transform`.
    pub signal: Option<SampledSignal>,
}

impl From<ExperimentReport> for Outcome {
    fn from(report: ExperimentReport) -> Self {
        Self { report, signal: None }
    }
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let engine = Engine::new(cfg.engine)?;
    let base = &cfg.base_dir;
    Ok(match &cfg.params {
        Params::Transform(p) => transform(&engine, p, cfg)?,
        Params::VerifyGroup(p) => verify_group(&engine, p, cfg)?.into(),
        Params::SweepL2(p) => l2_continuity_sweep(&engine, p)?.into(),
        Params::Pointwise(p) => {
            let f = p.signal.load(base)?;
            pointwise_probe(&engine, &f, p.u, &p.sweep, p.space, &p.ladder)?.into()
        }
        Params::Maximal(MaximalParams::Estimate { signal, profile, a_grid, u, p }) => {
            let profile = profile.build()?;
            let a_grid = match a_grid {
                AGrid::List(v) => v.clone(),
                AGrid::Geometric { geometric } => geometric_a_grid(&profile, *geometric),
            };
            let q = MaximalQuery { profile, a_grid, u_grid: u.values()?, p: p.unwrap_or(f64::INFINITY) };
            maximal_estimate(&engine, &q, &signal.load(base)?)?.into()
        }
        Params::Maximal(MaximalParams::HolderBound(p)) => holder_maximal_bound(&engine, &p.build()?)?.into(),
        Params::Counterexample(p) => counterexample_experiment(&engine, &p.build()?)?.into(),
        Params::LemmaIntegral(p) => lemma(p)?.into(),
        Params::Wavepacket(p) => wavepacket_probe(&engine, &p.build()?)?.into(),
        Params::GlobalProbe(p) => global_unboundedness_probe(&p.build()?)?.into(),
    })
}

fn params(a: f64, b: f64, c: f64, d: Option<[f64; 2]>) -> Result<LctParams> {
    Ok(match d {
        Some([re, im]) => LctParams::new(a, b, c, Complex64::new(re, im))?,
        None => LctParams::unitary(a, b, c)?,
    })
}

fn points_report(name: &str, u: &[f64], v: &[Complex64]) -> Result<ExperimentReport> {
    let mut rep = ExperimentReport::new(name, &["u", "re", "im"]);
    for (&x, z) in u.iter().zip(v) {
        rep.push_row(vec![x.into(), z.re.into(), z.im.into()])?;
    }
    Ok(rep)
}

fn transform(engine: &Engine, p: &TransformParams, cfg: &RunConfig) -> Result<Outcome> {
    let f = p.signal.load(&cfg.base_dir)?;
    let alias = &cfg.engine.alias;
    let out = match &p.op {
        TransformOp::Fourier => fourier_with(&f, alias)?,
        TransformOp::InverseFourier => inverse_fourier_with(&f, alias)?,
        TransformOp::Frft { alpha } => engine.frft(*alpha, &f)?,
        TransformOp::LctChirp { a, b, c, d } => engine.lct_chirp(&params(*a, *b, *c, *d)?, &f)?,
        TransformOp::Subgroup { spec, alpha } => Algebra::default().apply(engine, spec, *alpha, &f)?,
        TransformOp::LctDirect { a, b, c, d, u } => {
            let u = u.values()?;
            let v = engine.lct_direct(&params(*a, *b, *c, *d)?, &f, &u)?;
            return Ok(points_report("transform", &u, &v)?.into());
        }
        TransformOp::GAlpha { a, b, d, u } => {
            let u = u.values()?;
            let v = engine.g_alpha(*a, *b, Complex64::new(d[0], d[1]), &f, &u)?;
            return Ok(points_report("transform", &u, &v)?.into());
        }
        TransformOp::LimitOperator { a, profile, u } => {
            let u = u.values()?;
            let v = engine.l_a(*a, &profile.build()?, &f, &u)?;
            return Ok(points_report("transform", &u, &v)?.into());
        }
    };
    let mut rep = ExperimentReport::new("transform", &["t", "re", "im"]);
    for (t, z) in out.grid().points().zip(out.values()) {
        rep.push_row(vec![t.into(), z.re.into(), z.im.into()])?;
    }
    let nf = f.l2_norm();
    if nf > 0.0 {
        rep.set_scalar("norm_ratio", out.l2_norm() / nf);
    }
    if let Some(r) = &p.reference {
        let r = r.load(&cfg.base_dir)?;
        if r.len() != out.len()
            || (r.grid().half_width() - out.grid().half_width()).abs() > 1e-9 * r.grid().half_width()
        {
            return Err(CliError::schema(format!(
                "reference grid {:?} differs from the output grid {:?}",
                r.grid(),
                out.grid()
            )));
        }
        let peak = r.max_abs();
        let err = out.values().iter().zip(r.values()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        let diff: Vec<Complex64> = out.values().iter().zip(r.values()).map(|(a, b)| a - b).collect();
        let l2 = SampledSignal::new(*out.grid(), diff)?.l2_norm() / r.l2_norm();
        rep.set_scalar("reference_max_error", err / peak);
        rep.set_scalar("reference_l2_error", l2);
    }
    Ok(Outcome { report: rep, signal: Some(out) })
}

fn draw_pairs(alg: &Algebra, p: &VerifyGroupParams, seed: u64) -> Result<Vec<[f64; 2]>> {
    let Some(r) = &p.random else { return Ok(Vec::new()) };
    if !(r.low < r.high && r.low.is_finite() && r.high.is_finite()) {
        return Err(CliError::schema("random pair range needs finite low < high"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(r.count);
    let mut tries = 0usize;
    while out.len() < r.count {
        tries += 1;
        if tries > 1000 * r.count.max(1) {
            return Err(CliError::schema("could not draw enough non-degenerate pairs from the range"));
        }
        let (a, b) = (rng.gen_range(r.low..r.high), rng.gen_range(r.low..r.high));
        match alg.group_residual(&p.spec, a, b) {
            Ok(_) => out.push([a, b]),
            Err(lctkit::Error::Degenerate(_)) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Ok(out)
}

fn verify_group(engine: &Engine, p: &VerifyGroupParams, cfg: &RunConfig) -> Result<ExperimentReport> {
    let alg = Algebra::new(p.algebra)?;
    let mut pairs = p.pairs.clone();
    pairs.extend(draw_pairs(&alg, p, cfg.seed)?);
    if pairs.is_empty() {
        return Err(CliError::schema("verify-group needs explicit pairs or a random block"));
    }
    let signal = match &p.operator {
        Some(op) => Some(op.signal.load(&cfg.base_dir)?),
        None => None,
    };
    let mut rep = ExperimentReport::new(
        "verify-group",
        &["alpha", "beta", "res_A", "res_B", "res_C", "res_D", "res_max", "operator"],
    );
    let mut worst: f64 = 0.0;
    let mut worst_op: f64 = 0.0;
    for [a, b] in pairs {
        let r = alg.group_residual(&p.spec, a, b)?;
        worst = worst.max(r.max());
        let op = match &signal {
            Some(f) => {
                let v = alg.operator_group_check(engine, &p.spec, a, b, f)?;
                worst_op = worst_op.max(v);
                Cell::from(v)
            }
            None => Cell::from(f64::NAN),
        };
        rep.push_row(vec![a.into(), b.into(), r.a.into(), r.b.into(), r.c.into(), r.d.into(), r.max().into(), op])?;
    }
    rep.set_scalar("max_residual", worst);
    rep.set_flag("parameter_law", worst <= p.tolerance);
    if let Some(op) = &p.operator {
        rep.set_scalar("max_operator_residual", worst_op);
        rep.set_flag("operator_law", worst_op <= op.tolerance);
    }
    Ok(rep)
}

fn lemma(p: &LemmaParams) -> Result<ExperimentReport> {
    match &p.points {
        None => Ok(oscillatory_integral_lattice(&p.n_limits)?),
        Some(points) => {
            let mut rep = ExperimentReport::new("lemma-integral", &["a", "b", "N", "re", "im", "abs", "ratio"]);
            for &[a, b] in points {
                for &n in &p.n_limits {
                    let single = oscillatory_integral_check(a, b, n)?;
                    rep.rows.extend(single.rows);
                }
            }
            Ok(rep)
        }
    }
}
