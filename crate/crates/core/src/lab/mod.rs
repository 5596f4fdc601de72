//! Convergence experiments. Each returns an [`ExperimentReport`].

mod ae;
mod counterexample;
mod fit;
mod global;
mod integral;
mod maximal;
mod report;
mod sweep;
mod wavepacket;

pub use ae::{ae_convergence_fraction, default_u_grid};
pub use counterexample::{
    counterexample_experiment, counterexample_grid, counterexample_seminorm, holder_counterexample,
    CounterexampleConfig, CounterexampleSpec,
};
pub use fit::power_fit;
pub use global::{global_unboundedness_probe, GlobalProbeConfig};
pub use integral::{
    normalized_ratio, oscillatory_integral, oscillatory_integral_check, oscillatory_integral_lattice, LATTICE_VALUES,
};
pub use maximal::{
    geometric_a_grid, holder_maximal_bound, lp_norm, maximal_estimate, maximal_function, HolderBoundConfig,
    MaximalQuery, MaximalValues,
};
pub use report::{Cell, Curve, ExperimentReport, PowerFit};
pub use sweep::{
    dyadic_steps, l2_continuity_sweep, pointwise_probe, weight_integral, DualLadder, ScalarProfile, SweepConfig,
};
pub use wavepacket::{modulated_packet, packet, wavepacket_probe, WavepacketConfig};
