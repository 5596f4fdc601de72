use std::f64::consts::PI;

use lctkit::fixtures::Fixture;
use lctkit::lab::*;
use lctkit::lct::{BProfile, Engine, ProfileKind};
use lctkit::{fourier, Complex64, Error, Grid, NormSpec, SampledSignal};
use proptest::prelude::*;

fn engine() -> Engine {
    Engine::default()
}

#[test]
fn continuous_sweep_gap_halves() {
    let rep = l2_continuity_sweep(&engine(), &SweepConfig::continuous_default()).unwrap();
    assert_eq!(rep.flag("gap_halving"), Some(true));
    assert_eq!(rep.flag("gap_monotone"), Some(true));
    let fit = rep.fit("gap:gaussian").unwrap();
    assert!((fit.exponent - 1.0).abs() < 0.05, "{fit:?}");
}

#[test]
fn constant_profiles_have_zero_gap() {
    let cfg = SweepConfig {
        a: ScalarProfile::Constant { value: 0.3 },
        b: ScalarProfile::Constant { value: 1.5 },
        ..SweepConfig::continuous_default()
    };
    let rep = l2_continuity_sweep(&engine(), &cfg).unwrap();
    for g in rep.column("gap").unwrap() {
        assert!(g <= 1e-12, "{g}");
    }
}

#[test]
fn jump_sweep_keeps_gap_above_bound() {
    let cfg = SweepConfig {
        a: ScalarProfile::Affine { offset: 0.0, slope: 1.0 },
        b: ScalarProfile::Jump { before: 1.0, after: 2.0, at: 0.0 },
        steps: dyadic_steps(1e-3, 8),
        ..SweepConfig::continuous_default()
    };
    let rep = l2_continuity_sweep(&engine(), &cfg).unwrap();
    assert_eq!(rep.flag("gap_lower_bound_violated"), Some(false));
    let bound = (1.0 - 1.0 / 2f64.sqrt()) * (2.0 * PI).sqrt();
    for g in rep.column("gap").unwrap() {
        assert!(g >= 0.9 * bound);
    }
}

#[test]
fn sweep_rejects_vanishing_b() {
    let cfg = SweepConfig { b: ScalarProfile::Constant { value: 0.0 }, ..SweepConfig::continuous_default() };
    assert!(matches!(l2_continuity_sweep(&engine(), &cfg), Err(Error::Degenerate(_))));
}

#[test]
fn pointwise_deviation_vanishes_for_gaussian() {
    let cfg = SweepConfig::continuous_default();
    let f = Fixture::Gaussian.sample(cfg.grid).unwrap();
    for space in [NormSpec::L2, NormSpec::WeightedL2 { r: 1.0 }, NormSpec::Sobolev { s: 1.0 }] {
        let rep = pointwise_probe(&engine(), &f, 0.0, &cfg, space, &DualLadder::default()).unwrap();
        assert_eq!(rep.flag("deviation_vanishing"), Some(true));
    }
}

#[test]
fn dual_norm_growth_tracks_weight_order() {
    let cfg = SweepConfig::continuous_default();
    let f = Fixture::Gaussian.sample(cfg.grid).unwrap();
    let e = engine();
    let low = pointwise_probe(&e, &f, 0.0, &cfg, NormSpec::WeightedL2 { r: 0.25 }, &DualLadder::default()).unwrap();
    let exp = low.fit("dual_norm").unwrap().exponent;
    assert!((exp - 0.25).abs() <= 0.05, "{exp}");
    assert_eq!(low.flag("dual_norm_bounded"), Some(false));
    let high = pointwise_probe(&e, &f, 0.0, &cfg, NormSpec::WeightedL2 { r: 1.0 }, &DualLadder::default()).unwrap();
    assert_eq!(high.flag("dual_norm_bounded"), Some(true));
}

#[test]
fn weight_integral_matches_closed_forms() {
    assert!((weight_integral(1.0, 10.0) - 2.0 * 10f64.atan()).abs() < 1e-10);
    assert!((weight_integral(0.5, 10.0) - 2.0 * 10f64.asinh()).abs() < 1e-10);
    assert!((weight_integral(0.0, 10.0) - 20.0).abs() < 1e-10);
}

fn indicator_signal(grid: Grid) -> SampledSignal {
    // f̂ = χ_{[-1,1]}  ⇔  f(t) = √(2/π)·sin(t)/t
    SampledSignal::from_real_fn(grid, |t| if t == 0.0 { (2.0 / PI).sqrt() } else { (2.0 / PI).sqrt() * t.sin() / t })
        .unwrap()
}

#[test]
fn maximal_dominates_signal_for_band_limited_input() {
    let g = Grid::new(40.0, 8192).unwrap();
    let f = indicator_signal(g);
    let profile = BProfile::constant_one();
    let u: Vec<f64> = (-40..=40).map(|k| k as f64 * 0.1).collect();
    let q =
        MaximalQuery { profile, a_grid: (0..12).map(|j| 0.1 / (1 << j) as f64).collect(), u_grid: u.clone(), p: 2.0 };
    let e = Engine::new(lctkit::lct::EngineConfig { alias: lctkit::AliasPolicy::permissive(), ..Default::default() })
        .unwrap();
    let prep = e.prepare(&f).unwrap();
    let m = maximal_function(&e, &q, &prep).unwrap();
    for (k, &x) in u.iter().enumerate() {
        assert!(m.lstar[k] >= f.interpolate(x).norm() - 2e-3, "u = {x}");
    }
}

#[test]
fn maximal_of_gaussian_is_below_l1_bound() {
    let g = Grid::new(20.0, 4096).unwrap();
    let f = Fixture::Gaussian.sample(g).unwrap();
    let spec = fourier(&f).unwrap();
    let l1 = spec.values().iter().map(|v| v.norm()).sum::<f64>() * spec.grid().spacing();
    let profile = BProfile::new(ProfileKind::Linear { slope: 0.5 }, 0.0, 1.0).unwrap();
    let q = MaximalQuery {
        a_grid: geometric_a_grid(&profile, 10),
        profile,
        u_grid: (-30..=30).map(|k| k as f64 * 0.2).collect(),
        p: f64::INFINITY,
    };
    let rep = maximal_estimate(&engine(), &q, &f).unwrap();
    for v in rep.column("lstar").unwrap() {
        assert!(v.is_finite() && v <= l1 / (2.0 * PI).sqrt() + 1e-9);
    }
    assert!(rep.notes.iter().any(|n| n.contains("L^p")));
}

#[test]
fn maximal_query_rejects_points_outside_profile() {
    let profile = BProfile::constant_one();
    let q = MaximalQuery { profile, a_grid: vec![2.0], u_grid: vec![0.0], p: 2.0 };
    assert!(matches!(q.validate(), Err(Error::InvalidParameter(_))));
}

#[test]
fn lp_norm_trapezoid() {
    let u: Vec<f64> = (0..=100).map(|k| k as f64 / 100.0).collect();
    let g = vec![2.0; u.len()];
    assert!((lp_norm(&u, &g, 1.0) - 2.0).abs() < 1e-12);
    assert!((lp_norm(&u, &g, 4.0) - 2.0).abs() < 1e-12);
    assert_eq!(lp_norm(&u, &g, f64::INFINITY), 2.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn maximal_monotone_under_refinement(extra in proptest::collection::vec(0.001f64..1.0, 1..4)) {
        let g = Grid::new(20.0, 2048).unwrap();
        let f = Fixture::Hermite4.sample(g).unwrap();
        let profile = BProfile::new(ProfileKind::SqrtOnePlusA2, 0.0, 1.0).unwrap();
        let base = geometric_a_grid(&profile, 5);
        let u: Vec<f64> = (-10..=10).map(|k| k as f64 * 0.3).collect();
        let e = engine();
        let prep = e.prepare(&f).unwrap();
        let q = MaximalQuery { profile: profile.clone(), a_grid: base.clone(), u_grid: u.clone(), p: 2.0 };
        let coarse = maximal_function(&e, &q, &prep).unwrap();
        let mut fine = base;
        fine.extend(extra);
        let q = MaximalQuery { profile, a_grid: fine, u_grid: u, p: 2.0 };
        let refined = maximal_function(&e, &q, &prep).unwrap();
        for (c, r) in coarse.lstar.iter().zip(&refined.lstar) {
            prop_assert!(r >= c);
        }
    }
}

#[test]
fn counterexample_vanishes_at_u0() {
    let spec = CounterexampleSpec::standard(12, 0.01, 0.1, BProfile::constant_one()).unwrap();
    let f = holder_counterexample(&spec).unwrap();
    assert_eq!(f.interpolate(0.01).norm(), 0.0);
    let integral: f64 = spec.phi.values().iter().map(|v| v.re).sum::<f64>() * spec.phi.grid().spacing();
    assert!((integral - 0.1).abs() < 1e-14);
}

#[test]
fn counterexample_partial_sums_converge_uniformly() {
    let profile = BProfile::constant_one();
    let b = CounterexampleSpec::standard(13, 0.01, 0.1, profile).unwrap();
    let a = CounterexampleSpec { k: 12, ..b.clone() };
    let fa = holder_counterexample(&a).unwrap();
    let fb = holder_counterexample(&b).unwrap();
    let gap = fb.sub(&fa).unwrap().max_abs();
    let bound = 2f64.sqrt() * 2f64.powf(-13.0 / 2.0) * a.phi.max_abs();
    assert!(gap <= bound * (1.0 + 1e-12), "{gap} > {bound}");
}

#[test]
fn counterexample_leading_term_matches_direct_quadrature() {
    let spec = CounterexampleSpec::standard(14, 0.01, 0.1, BProfile::constant_one()).unwrap();
    let f = holder_counterexample(&spec).unwrap();
    let n = 9;
    let a = CounterexampleSpec::a(n);
    let got = engine().l_a(a, &spec.profile, &f, &[0.01]).unwrap()[0];
    // (2π)^{-1/2}∫ e^{i(uv + av²)} f̂(v) dv = (4πa)^{-1/2} e^{iπ/4} ∫ f(t) e^{-i(u-t)²/(4a)} dt
    let d = f.grid().spacing();
    let direct: Complex64 = f
        .grid()
        .points()
        .zip(f.values())
        .map(|(t, v)| v * Complex64::from_polar(1.0, -(0.01 - t).powi(2) / (4.0 * a)))
        .sum::<Complex64>()
        * d
        * Complex64::from_polar(1.0 / (4.0 * PI * a).sqrt(), PI / 4.0);
    assert!((got - direct).norm() < 1e-9, "{got} vs {direct}");
}

#[test]
fn counterexample_seminorm_is_stable() {
    let p = BProfile::constant_one();
    let s12 = counterexample_seminorm(12, 0.01, 0.1, &p).unwrap();
    let s16 = counterexample_seminorm(16, 0.01, 0.1, &p).unwrap();
    assert!((s16 / s12 - 1.0).abs() < 0.1, "{s12} {s16}");
}

#[test]
fn counterexample_validation() {
    let p = BProfile::constant_one();
    assert!(matches!(CounterexampleSpec::standard(10, 0.02, 0.1, p.clone()), Err(Error::InvalidParameter(_))));
    let mut spec = CounterexampleSpec::standard(10, 0.01, 0.1, p.clone()).unwrap();
    let g = *spec.phi.grid();
    spec.phi = SampledSignal::from_real_fn(g, |t| if (0.1..0.3).contains(&t) { 1.0 } else { 0.0 }).unwrap();
    assert!(matches!(holder_counterexample(&spec), Err(Error::InvalidSignal(_))));
    let mut spec = CounterexampleSpec::standard(10, 0.01, 0.1, p).unwrap();
    spec.k = 16;
    assert!(matches!(holder_counterexample(&spec), Err(Error::AliasingRisk(_))));
}

#[test]
fn counterexample_grid_sizes() {
    for (k, n) in [(15, 1 << 14), (20, 1 << 19), (25, 1 << 24)] {
        assert_eq!(counterexample_grid(k, 0.01, 1.0).unwrap().count(), n);
    }
}

#[test]
fn oscillatory_integral_pure_chirp_is_stable() {
    let r100 = normalized_ratio(1.0, 0.0, oscillatory_integral(1.0, 0.0, 100.0).unwrap());
    let r200 = normalized_ratio(1.0, 0.0, oscillatory_integral(1.0, 0.0, 200.0).unwrap());
    assert!((r200 / r100 - 1.0).abs() < 0.02);
}

#[test]
fn oscillatory_integral_pure_modulation_is_bounded() {
    let r100 = normalized_ratio(0.0, 4.0, oscillatory_integral(0.0, 4.0, 100.0).unwrap());
    let r200 = normalized_ratio(0.0, 4.0, oscillatory_integral(0.0, 4.0, 200.0).unwrap());
    assert!(r100.is_finite() && r200.is_finite());
    assert!(r100.max(r200) < 2.0 * r100.min(r200));
}

#[test]
fn oscillatory_integral_refinement_oracle() {
    // ∫_{-N}^{N} (1+ξ²)^{-1/4} cos(bξ) dξ against a Simpson reference at a far finer step.
    let (b, n) = (1.0, 20.0);
    let v = oscillatory_integral(0.0, b, n).unwrap();
    let m = 400_000;
    let h = 2.0 * n / m as f64;
    let g = |x: f64| (1.0 + x * x).powf(-0.25) * (b * x).cos();
    let mut s = g(-n) + g(n);
    for k in 1..m {
        s += if k % 2 == 1 { 4.0 } else { 2.0 } * g(-n + k as f64 * h);
    }
    let reference = s * h / 3.0;
    assert!((v.re - reference).abs() < 1e-3 && v.im.abs() < 1e-10, "{v} vs {reference}");
}

#[test]
fn oscillatory_integral_errors() {
    assert!(matches!(oscillatory_integral(0.0, 0.0, 100.0), Err(Error::InvalidParameter(_))));
    assert!(matches!(oscillatory_integral(0.0, 0.5, 1.5), Err(Error::InvalidParameter(_))));
    let rep = oscillatory_integral_check(2.0, 1.0, 100.0).unwrap();
    assert!(rep.scalar("ratio").unwrap().is_finite());
}

#[test]
fn ae_fraction_vanishes_for_gaussian() {
    let f = Fixture::Gaussian.sample(Grid::new(20.0, 4096).unwrap()).unwrap();
    let p = BProfile::new(ProfileKind::Linear { slope: 0.5 }, 0.0, 1.0).unwrap();
    let a: Vec<f64> = (0..12).map(|j| 0.5f64.powi(j)).collect();
    let u = default_u_grid(&f, 201);
    let rep = ae_convergence_fraction(&engine(), &f, &p, &a, 1e-3, &u, None).unwrap();
    assert_eq!(rep.flag("fraction_vanishing"), Some(true));
    assert_eq!(rep.flag("fraction_nonincreasing_tail"), Some(true));
}

#[test]
fn ae_fraction_of_zero_is_zero() {
    let f = SampledSignal::zeros(Grid::new(10.0, 1024).unwrap());
    let p = BProfile::constant_one();
    let rep = ae_convergence_fraction(&engine(), &f, &p, &[0.5, 0.25], 1e-3, &[0.0, 1.0], Some(0.5)).unwrap();
    assert!(rep.column("fraction").unwrap().iter().all(|&x| x == 0.0));
}

#[test]
fn ae_fraction_requires_identity_limit() {
    let f = Fixture::Gaussian.sample(Grid::new(20.0, 1024).unwrap()).unwrap();
    let p = BProfile::new(ProfileKind::ConstantOne, 0.5, 1.0).unwrap();
    let r = ae_convergence_fraction(&engine(), &f, &p, &[0.9], 1e-3, &[0.0], None);
    assert!(matches!(r, Err(Error::Inapplicable(_))));
}

#[test]
fn ae_witness_on_counterexample_does_not_converge() {
    let spec = CounterexampleSpec::standard(14, 0.01, 0.1, BProfile::constant_one()).unwrap();
    let f = holder_counterexample(&spec).unwrap();
    let a: Vec<f64> = (10..=13).map(|j| 0.5f64.powi(j)).collect();
    let u: Vec<f64> = (0..50).map(|k| -0.5 + k as f64 * 0.04).collect();
    let rep = ae_convergence_fraction(&engine(), &f, &spec.profile, &a, 1e-3, &u, Some(0.01)).unwrap();
    for w in rep.column("witness_deviation").unwrap() {
        assert!(w > 0.03, "{w}");
    }
}

#[test]
fn wavepacket_scaling() {
    let cfg = WavepacketConfig { ladder: vec![16.0, 32.0, 64.0], ..WavepacketConfig::default() };
    let rep = wavepacket_probe(&engine(), &cfg).unwrap();
    assert!((rep.fit("l2_phi").unwrap().exponent - 0.5).abs() <= 0.05);
    assert_eq!(rep.flag("witness_lower_bound"), Some(true));
    assert_eq!(rep.flag("hs_exponent"), Some(true));
}

#[test]
fn wavepacket_rejects_unresolved_scale() {
    let cfg = WavepacketConfig { ladder: vec![16.0, 4096.0], ..WavepacketConfig::default() };
    assert!(matches!(wavepacket_probe(&engine(), &cfg), Err(Error::AliasingRisk(_))));
}

#[test]
fn global_probe_rejects_constant_profile() {
    let cfg = GlobalProbeConfig { profile: BProfile::constant_one(), ..GlobalProbeConfig::default() };
    assert!(matches!(global_unboundedness_probe(&cfg), Err(Error::Inapplicable(_))));
}

#[test]
fn global_probe_small_ladder() {
    let cfg = GlobalProbeConfig { ladder: vec![16.0, 32.0, 64.0], ..GlobalProbeConfig::default() };
    let rep = global_unboundedness_probe(&cfg).unwrap();
    assert_eq!(rep.flag("witness_bound"), Some(true));
    assert_eq!(rep.flag("ratio_increasing"), Some(true));
    assert_eq!(rep.flag("hs_invariant"), Some(true));
}

#[test]
fn holder_bound_rejects_single_radius() {
    let cfg = HolderBoundConfig { radii: vec![1.0], ..HolderBoundConfig::default() };
    assert!(matches!(holder_maximal_bound(&engine(), &cfg), Err(Error::InvalidParameter(_))));
}
