//! JSON run configuration and per-command parameter blocks.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use lctkit::fixtures::Fixture;
use lctkit::lab::{
    CounterexampleConfig, DualLadder, GlobalProbeConfig, HolderBoundConfig, SweepConfig, WavepacketConfig,
};
use lctkit::lct::{BProfile, EngineConfig, ProfileKind};
use lctkit::subgroup::{AlgebraConfig, SubgroupSpec};
use lctkit::{Grid, NormSpec, SampledSignal};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::io::{read_signal, signal_from_json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CommandName {
    Transform,
    VerifyGroup,
    SweepL2,
    Pointwise,
    Maximal,
    Counterexample,
    LemmaIntegral,
    Wavepacket,
    GlobalProbe,
}

impl CommandName {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandName::Transform => "transform",
            CommandName::VerifyGroup => "verify-group",
            CommandName::SweepL2 => "sweep-l2",
            CommandName::Pointwise => "pointwise",
            CommandName::Maximal => "maximal",
            CommandName::Counterexample => "counterexample",
            CommandName::LemmaIntegral => "lemma-integral",
            CommandName::Wavepacket => "wavepacket",
            CommandName::GlobalProbe => "global-probe",
        }
    }
}

/// The document as written.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    command: Option<CommandName>,
    #[serde(default)]
    seed: u64,
    out: Option<PathBuf>,
    #[serde(default)]
    engine: EngineConfig,
    #[serde(default)]
    params: serde_json::Value,
}

/// A validated configuration. Serializing it gives a document that re-runs
/// the same computation.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: CommandName,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    pub engine: EngineConfig,
    pub params: Params,
    #[serde(skip)]
    pub base_dir: PathBuf,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Params {
    Transform(TransformParams),
    VerifyGroup(VerifyGroupParams),
    SweepL2(SweepConfig),
    Pointwise(PointwiseParams),
    Maximal(MaximalParams),
    Counterexample(CounterexampleParams),
    LemmaIntegral(LemmaParams),
    Wavepacket(WavepacketParams),
    GlobalProbe(GlobalParams),
}

fn typed<T: DeserializeOwned>(v: serde_json::Value, command: CommandName) -> Result<T> {
    let v = if v.is_null() { serde_json::Value::Object(Default::default()) } else { v };
    serde_json::from_value(v).map_err(|e| CliError::schema(format!("params for {}: {e}", command.as_str())))
}

impl RunConfig {
    pub fn parse(text: &str, command: CommandName, base_dir: &Path) -> Result<Self> {
        let raw: RawConfig = serde_json::from_str(text).map_err(CliError::schema)?;
        if let Some(c) = raw.command {
            if c != command {
                return Err(CliError::schema(format!(
                    "config is for command {:?} but {:?} was requested",
                    c.as_str(),
                    command.as_str()
                )));
            }
        }
        let p = raw.params;
        let params = match command {
            CommandName::Transform => Params::Transform(typed(p, command)?),
            CommandName::VerifyGroup => Params::VerifyGroup(typed(p, command)?),
            CommandName::SweepL2 => {
                let cfg: SweepConfig = if p.is_null() { SweepConfig::continuous_default() } else { typed(p, command)? };
                cfg.validate()?;
                Params::SweepL2(cfg)
            }
            CommandName::Pointwise => Params::Pointwise(typed(p, command)?),
            CommandName::Maximal => {
                Params::Maximal(if p.is_null() { MaximalParams::default() } else { typed(p, command)? })
            }
            CommandName::Counterexample => Params::Counterexample(typed(p, command)?),
            CommandName::LemmaIntegral => Params::LemmaIntegral(typed(p, command)?),
            CommandName::Wavepacket => Params::Wavepacket(typed(p, command)?),
            CommandName::GlobalProbe => Params::GlobalProbe(typed(p, command)?),
        };
        Ok(Self { command, seed: raw.seed, out: raw.out, engine: raw.engine, params, base_dir: base_dir.to_path_buf() })
    }

    pub fn load(path: &Path, command: CommandName) -> Result<Self> {
        if !path.exists() {
            return Err(CliError::schema(format!("config file {} does not exist", path.display())));
        }
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Self::parse(&text, command, &base)
    }
}

/// `b(a)` and its interval `[a₀, a₀+δ]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileSpec {
    pub b: ProfileKind,
    pub interval: [f64; 2],
}

impl ProfileSpec {
    pub fn build(&self) -> Result<BProfile> {
        if matches!(self.b, ProfileKind::Custom { .. }) {
            return Err(CliError::schema("custom profiles cannot be configured from JSON"));
        }
        Ok(BProfile::new(self.b, self.interval[0], self.interval[1])?)
    }
}

impl From<&BProfile> for ProfileSpec {
    fn from(p: &BProfile) -> Self {
        let (a, b) = p.interval();
        Self { b: p.kind(), interval: [a, b] }
    }
}

/// Where a signal comes from. Relative paths are resolved against the
/// config file's directory.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SignalSource {
    Fixture { name: Fixture, grid: Grid },
    File { path: PathBuf },
    Bundled { name: String },
}

const BUNDLED: [(&str, &str); 2] = [
    ("gaussian", include_str!("../fixtures/gaussian.json")),
    ("gaussian_fourier", include_str!("../fixtures/gaussian_fourier.json")),
];

impl SignalSource {
    pub fn load(&self, base: &Path) -> Result<SampledSignal> {
        match self {
            SignalSource::Fixture { name, grid } => Ok(name.sample(*grid)?),
            SignalSource::File { path } => read_signal(&base.join(path)),
            SignalSource::Bundled { name } => {
                let (_, text) = BUNDLED
                    .iter()
                    .find(|(n, _)| n == name)
                    .ok_or_else(|| CliError::schema(format!("no bundled signal named {name:?}")))?;
                signal_from_json(text)
            }
        }
    }
}

/// Evaluation points: an explicit list or `count` evenly spaced points on
/// `[start, stop]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Points {
    List(Vec<f64>),
    Range { start: f64, stop: f64, count: usize },
}

impl Points {
    pub fn values(&self) -> Result<Vec<f64>> {
        match *self {
            Points::List(ref v) if !v.is_empty() => Ok(v.clone()),
            Points::List(_) => Err(CliError::schema("point list is empty")),
            Points::Range { start, stop, count } => {
                if count == 0 || !(start.is_finite() && stop.is_finite()) {
                    return Err(CliError::schema("point range needs finite ends and count >= 1"));
                }
                if count == 1 {
                    return Ok(vec![start]);
                }
                let h = (stop - start) / (count - 1) as f64;
                Ok((0..count).map(|k| start + k as f64 * h).collect())
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TransformOp {
    Fourier,
    InverseFourier,
    Frft {
        alpha: f64,
    },
    /// Chirp path on the natural output grid; `D` defaults to the unitary
    /// normalizer.
    LctChirp {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        #[serde(rename = "C")]
        c: f64,
        #[serde(rename = "D", default)]
        d: Option<[f64; 2]>,
    },
    LctDirect {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        #[serde(rename = "C")]
        c: f64,
        #[serde(rename = "D", default)]
        d: Option<[f64; 2]>,
        u: Points,
    },
    GAlpha {
        #[serde(rename = "A")]
        a: f64,
        #[serde(rename = "B")]
        b: f64,
        #[serde(rename = "D", default = "unit")]
        d: [f64; 2],
        u: Points,
    },
    LimitOperator {
        a: f64,
        profile: ProfileSpec,
        u: Points,
    },
    Subgroup {
        spec: SubgroupSpec,
        alpha: f64,
    },
}

fn unit() -> [f64; 2] {
    [1.0, 0.0]
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformParams {
    pub signal: SignalSource,
    pub op: TransformOp,
    /// Compared sample by sample against grid-valued output.
    #[serde(default)]
    pub reference: Option<SignalSource>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomPairs {
    pub count: usize,
    pub low: f64,
    pub high: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorCheck {
    pub signal: SignalSource,
    #[serde(default = "operator_tol")]
    pub tolerance: f64,
}

fn operator_tol() -> f64 {
    1e-3
}

fn param_tol() -> f64 {
    1e-9
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyGroupParams {
    pub spec: SubgroupSpec,
    #[serde(default)]
    pub pairs: Vec<[f64; 2]>,
    /// Pairs drawn from the run seed; draws at degenerate points are redrawn.
    #[serde(default)]
    pub random: Option<RandomPairs>,
    #[serde(default = "param_tol")]
    pub tolerance: f64,
    #[serde(default)]
    pub operator: Option<OperatorCheck>,
    #[serde(default)]
    pub algebra: AlgebraConfig,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointwiseParams {
    pub signal: SignalSource,
    pub u: f64,
    pub sweep: SweepConfig,
    pub space: NormSpec,
    #[serde(default)]
    pub ladder: DualLadder,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AGrid {
    List(Vec<f64>),
    Geometric { geometric: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case", deny_unknown_fields)]
pub enum MaximalParams {
    /// `L_* f` on a set of points; `p` omitted means the supremum.
    Estimate {
        signal: SignalSource,
        profile: ProfileSpec,
        a_grid: AGrid,
        u: Points,
        #[serde(default)]
        p: Option<f64>,
    },
    HolderBound(HolderBoundParams),
}

impl Default for MaximalParams {
    fn default() -> Self {
        MaximalParams::HolderBound(HolderBoundParams::default())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HolderBoundParams {
    pub grid: Grid,
    pub profile: ProfileSpec,
    pub a_count: usize,
    pub u_step: f64,
    pub radii: Vec<f64>,
    pub fixtures: Vec<Fixture>,
}

impl Default for HolderBoundParams {
    fn default() -> Self {
        let d = HolderBoundConfig::default();
        Self {
            grid: d.grid,
            profile: (&d.profile).into(),
            a_count: d.a_count,
            u_step: d.u_step,
            radii: d.radii,
            fixtures: d.fixtures,
        }
    }
}

impl HolderBoundParams {
    pub fn build(&self) -> Result<HolderBoundConfig> {
        Ok(HolderBoundConfig {
            grid: self.grid,
            profile: self.profile.build()?,
            a_count: self.a_count,
            u_step: self.u_step,
            radii: self.radii.clone(),
            fixtures: self.fixtures.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CounterexampleParams {
    #[serde(rename = "K")]
    pub k: u32,
    pub u0: f64,
    pub integral: f64,
    pub profile: ProfileSpec,
    pub orders: Vec<u32>,
    pub stability: Vec<u32>,
    pub threshold: f64,
}

impl Default for CounterexampleParams {
    fn default() -> Self {
        let d = CounterexampleConfig::default();
        Self {
            k: d.k,
            u0: d.u0,
            integral: d.integral,
            profile: (&d.profile).into(),
            orders: d.orders,
            stability: d.stability,
            threshold: d.threshold,
        }
    }
}

impl CounterexampleParams {
    pub fn build(&self) -> Result<CounterexampleConfig> {
        Ok(CounterexampleConfig {
            k: self.k,
            u0: self.u0,
            integral: self.integral,
            profile: self.profile.build()?,
            orders: self.orders.clone(),
            stability: self.stability.clone(),
            threshold: self.threshold,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LemmaParams {
    pub n_limits: Vec<f64>,
    /// Single `(a, b)` points; the full lattice when omitted.
    pub points: Option<Vec<[f64; 2]>>,
}

impl Default for LemmaParams {
    fn default() -> Self {
        Self { n_limits: vec![100.0, 200.0], points: None }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WavepacketParams {
    pub ladder: Vec<f64>,
    pub s_values: Vec<f64>,
    pub profile: ProfileSpec,
    pub grid: Grid,
    pub witnesses: usize,
}

impl Default for WavepacketParams {
    fn default() -> Self {
        let d = WavepacketConfig::default();
        Self {
            ladder: d.ladder,
            s_values: d.s_values,
            profile: (&d.profile).into(),
            grid: d.grid,
            witnesses: d.witnesses,
        }
    }
}

impl WavepacketParams {
    pub fn build(&self) -> Result<WavepacketConfig> {
        Ok(WavepacketConfig {
            ladder: self.ladder.clone(),
            s_values: self.s_values.clone(),
            profile: self.profile.build()?,
            grid: self.grid,
            witnesses: self.witnesses,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GlobalParams {
    pub ladder: Vec<f64>,
    pub s: f64,
    pub p: f64,
    pub profile: ProfileSpec,
    pub a_count: usize,
    pub margin: f64,
    pub u_step: f64,
}

impl Default for GlobalParams {
    fn default() -> Self {
        let d = GlobalProbeConfig::default();
        Self {
            ladder: d.ladder,
            s: d.s,
            p: d.p,
            profile: (&d.profile).into(),
            a_count: d.a_count,
            margin: d.margin,
            u_step: d.u_step,
        }
    }
}

impl GlobalParams {
    pub fn build(&self) -> Result<GlobalProbeConfig> {
        Ok(GlobalProbeConfig {
            ladder: self.ladder.clone(),
            s: self.s,
            p: self.p,
            profile: self.profile.build()?,
            a_count: self.a_count,
            margin: self.margin,
            u_step: self.u_step,
        })
    }
}
