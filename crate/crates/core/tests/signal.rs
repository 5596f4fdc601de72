use std::f64::consts::PI;

use lctkit::fixtures::Fixture;
use lctkit::{fourier, inverse_fourier, norm, Complex64, Grid, NormSpec, SampledSignal};
use proptest::prelude::*;

/// Sum of modulated Gaussians well inside the grid and its band.
fn packet_strategy() -> impl Strategy<Value = SampledSignal> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0, -6.0f64..6.0, 0.5f64..2.0, -10.0f64..10.0), 1..5).prop_map(
        |terms| {
            let g = Grid::new(20.0, 1024).unwrap();
            SampledSignal::from_fn(g, |t| {
                terms
                    .iter()
                    .map(|&(re, im, m, s, w)| {
                        Complex64::new(re, im) * (-(t - m) * (t - m) / (2.0 * s * s)).exp() * Complex64::cis(w * t)
                    })
                    .sum()
            })
            .unwrap()
        },
    )
}

fn spec_strategy() -> impl Strategy<Value = NormSpec> {
    prop_oneof![
        Just(NormSpec::L2),
        (0.0f64..3.0).prop_map(|r| NormSpec::WeightedL2 { r }),
        (0.0f64..3.0).prop_map(|s| NormSpec::Sobolev { s }),
        (0.01f64..=1.0).prop_map(|s| NormSpec::HolderSeminorm { s }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parseval(f in packet_strategy()) {
        let n0 = f.l2_norm();
        prop_assume!(n0 > 1e-6);
        let n1 = fourier(&f).unwrap().l2_norm();
        prop_assert!((n1 - n0).abs() <= 1e-10 * n0);
    }

    #[test]
    fn round_trip(f in packet_strategy()) {
        let back = inverse_fourier(&fourier(&f).unwrap()).unwrap();
        let err = back.values().iter().zip(f.values()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        prop_assert!(err <= 1e-12 * f.max_abs().max(1e-300));
    }

    #[test]
    fn homogeneous(f in packet_strategy(), spec in spec_strategy(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let c = Complex64::new(re, im);
        let a = norm(&f.scale(c), spec).unwrap();
        let b = c.norm() * norm(&f, spec).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * b.max(1e-300));
    }

    #[test]
    fn sobolev_monotone(f in packet_strategy(), s1 in 0.0f64..2.0, ds in 0.0f64..2.0) {
        let a = norm(&f, NormSpec::Sobolev { s: s1 }).unwrap();
        let b = norm(&f, NormSpec::Sobolev { s: s1 + ds }).unwrap();
        prop_assert!(a <= b * (1.0 + 1e-14));
    }

    #[test]
    fn h0_is_l2(f in packet_strategy()) {
        let a = norm(&f, NormSpec::Sobolev { s: 0.0 }).unwrap();
        let b = norm(&f, NormSpec::L2).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * b.max(1e-300));
    }
}

#[test]
fn gaussian_norms() {
    let f = Fixture::Gaussian.sample(Grid::new(20.0, 4096).unwrap()).unwrap();
    assert!((norm(&f, NormSpec::L2).unwrap() - PI.powf(0.25)).abs() < 1e-6);
    // ∫(1+t²)e^{-t²} = (3/2)√π
    assert!((norm(&f, NormSpec::WeightedL2 { r: 1.0 }).unwrap() - (1.5 * PI.sqrt()).sqrt()).abs() < 1e-10);
    // ∫(1+ξ²)e^{-ξ²} is the same integral on the spectral side
    assert!((norm(&f, NormSpec::Sobolev { s: 1.0 }).unwrap() - (1.5 * PI.sqrt()).sqrt()).abs() < 1e-10);
}

#[test]
fn holder_seminorms() {
    let g = Grid::new(1.0, 1024).unwrap();
    let f = SampledSignal::from_real_fn(g, |t| t).unwrap();
    assert!((norm(&f, NormSpec::HolderSeminorm { s: 1.0 }).unwrap() - 1.0).abs() < 1e-12);
    let g = Grid::new(2.0, 4096).unwrap();
    let f = Fixture::SqrtArch.sample(g).unwrap();
    let h = norm(&f, NormSpec::HolderSeminorm { s: 0.5 }).unwrap();
    assert!(h > 0.9 && h <= 1.0 + 1e-12, "{h}");
}

#[test]
fn signal_round_trip_of_spectrum() {
    let g = Grid::new(20.0, 4096).unwrap();
    let spec = SampledSignal::from_real_fn(g.reciprocal(), |x| (-x * x / 2.0).exp()).unwrap();
    let f = inverse_fourier(&spec).unwrap();
    for (t, v) in f.grid().points().zip(f.values()) {
        assert!((v - (-t * t / 2.0).exp()).norm() < 1e-8);
    }
}
