use std::f64::consts::PI;

use lctkit::fixtures::Fixture;
use lctkit::lct::{Engine, LctParams};
use lctkit::subgroup::{compose, d_solution, family_params, group_residual, Algebra, Family, SubgroupSpec};
use lctkit::{Error, Grid};
use proptest::prelude::*;

fn spec(family: Family, omega: f64, lambda: f64, gamma: f64) -> SubgroupSpec {
    SubgroupSpec::new(family, omega, lambda, gamma).unwrap()
}

fn family_strategy() -> impl Strategy<Value = SubgroupSpec> {
    (0usize..3, 0.3f64..2.0, prop_oneof![-2.0f64..-0.3, 0.3f64..2.0], -1.5f64..1.5).prop_map(|(f, w, l, g)| {
        let fam = [Family::I, Family::II, Family::III][f];
        spec(fam, w, l, g)
    })
}

/// Distance of the family's pole set from `alpha`.
fn pole_distance(s: &SubgroupSpec, alpha: f64) -> f64 {
    match s.family {
        Family::I => {
            let x = s.omega * alpha;
            (x - (x / PI).round() * PI).abs()
        }
        Family::II => alpha.abs(),
        Family::III => (s.omega * alpha).abs().min(alpha.abs()),
    }
}

#[test]
fn family_entries() {
    let e = family_params(&spec(Family::II, 1.0, 1.0, 0.0), 1.0).unwrap();
    assert_eq!((e.a, e.b, e.c), (1.0, 1.0, 1.0));
    let h = family_params(&spec(Family::III, 1.0, 1.0, 0.0), 1.0).unwrap();
    assert!((h.a - 1.0f64.cosh() / 1.0f64.sinh()).abs() < 1e-15);
    assert!((h.b - 1.0 / 1.0f64.sinh()).abs() < 1e-15);
    assert!((h.a - 1.313035).abs() < 1e-6 && (h.b - 0.850918).abs() < 1e-6);
}

#[test]
fn compose_quarter_turns() {
    let p = LctParams::unitary(1.0, 2f64.sqrt(), 1.0).unwrap();
    let r = compose(&p, &p).unwrap();
    assert!(r.a.abs() < 1e-15 && (r.b - 1.0).abs() < 1e-15 && r.c.abs() < 1e-15);
    let e = LctParams::unitary(1.0, 1.0, 1.0).unwrap();
    let r = compose(&e, &e).unwrap();
    assert_eq!((r.a, r.b, r.c), (0.5, 0.5, 0.5));
}

#[test]
fn residual_examples() {
    let r = group_residual(&SubgroupSpec::frft(), 0.3, 0.4).unwrap();
    assert!(r.max() <= 1e-12, "{r:?}");
    let r = group_residual(&spec(Family::II, 1.0, 2.0, 1.0), 0.5, 0.25).unwrap();
    assert!(r.max() <= 1e-12, "{r:?}");
    assert!(matches!(group_residual(&SubgroupSpec::frft(), 0.3, PI - 0.3), Err(Error::Degenerate(_))));
}

#[test]
fn normalizer_examples() {
    let inv = |x: f64| (x / (2.0 * PI)).sqrt();
    let d = d_solution(&SubgroupSpec::frft(), PI / 2.0).unwrap();
    assert!((d.norm() - inv(1.0)).abs() < 1e-15);
    let d = d_solution(&spec(Family::II, 1.0, 1.0, 0.0), 2.0).unwrap();
    assert!((d.norm() - (1.0 / (4.0 * PI)).sqrt()).abs() < 1e-15);
    let d = d_solution(&spec(Family::III, 1.0, 1.0, 0.0), 1.0).unwrap();
    assert!((d.norm() - inv(1.0 / 1.0f64.sinh())).abs() < 1e-15);
    assert!((d.norm() - 0.368_006).abs() < 1e-6);
}

#[test]
fn hyperbolic_pair_matches_closed_form() {
    let s = spec(Family::III, 1.0, 1.0, 0.0);
    for (a, b) in [(0.2, 0.9), (1.3, -0.4), (-0.7, -0.6)] {
        let got = compose(&family_params(&s, b).unwrap(), &family_params(&s, a).unwrap()).unwrap();
        let want = family_params(&s, a + b).unwrap();
        assert!((got.a - want.a).abs() < 1e-9 && (got.b - want.b).abs() < 1e-9 && (got.c - want.c).abs() < 1e-9);
        assert!((got.d - want.d).norm() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parameter_group_law(s in family_strategy(), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        for x in [a, b, a + b] {
            prop_assume!(pole_distance(&s, x) > 0.05);
        }
        let r = group_residual(&s, a, b).unwrap();
        let scale = [a, b, a + b].iter().map(|&x| family_params(&s, x).unwrap().b.abs()).fold(1.0, f64::max);
        prop_assert!(r.max() <= 1e-9 * scale, "{:?} at ({}, {}): {:?}", s, a, b, r);
    }

    #[test]
    fn chirp_offset_is_constant(s in family_strategy(), a in -3.0f64..3.0) {
        prop_assume!(pole_distance(&s, a) > 1e-3);
        let p = family_params(&s, a).unwrap();
        prop_assert!((p.c - p.a - 2.0 * s.gamma).abs() <= 1e-12 * (1.0 + p.a.abs()));
    }

    #[test]
    fn normalizer_modulus(s in family_strategy(), a in -3.0f64..3.0) {
        prop_assume!(pole_distance(&s, a) > 1e-3);
        let p = family_params(&s, a).unwrap();
        let want = (p.b.abs() / (2.0 * PI)).sqrt();
        prop_assert!((p.d.norm() - want).abs() <= 1e-12 * want.max(1.0));
        prop_assert!(p.is_unitary(1e-12));
    }

    #[test]
    fn compose_is_associative(
        v in prop::collection::vec((-2.0f64..2.0, prop_oneof![-2.0f64..-0.3, 0.3f64..2.0], -2.0f64..2.0), 3)
    ) {
        let p: Vec<LctParams> = v.iter().map(|&(a, b, c)| LctParams::unitary(a, b, c).unwrap()).collect();
        let left = compose(&p[2], &p[1]).and_then(|qp| compose(&qp, &p[0]));
        let right = compose(&p[1], &p[0]).and_then(|pq| compose(&p[2], &pq));
        if let (Ok(l), Ok(r)) = (left, right) {
            let tol = 1e-9 * (1.0 + l.a.abs() + l.b.abs() + l.c.abs());
            prop_assume!(l.b.abs() < 1e6);
            prop_assert!((l.a - r.a).abs() <= tol && (l.b - r.b).abs() <= tol && (l.c - r.c).abs() <= tol);
            prop_assert!((l.d - r.d).norm() <= 1e-9 * (1.0 + l.d.norm()));
        }
    }
}

#[test]
fn operator_law_on_gaussian() {
    let f = Fixture::Gaussian.sample(Grid::new(20.0, 4096).unwrap()).unwrap();
    let alg = Algebra::default();
    let eng = Engine::default();
    let r = alg.operator_group_check(&eng, &SubgroupSpec::frft(), PI / 6.0, PI / 6.0, &f).unwrap();
    assert!(r <= 1e-3, "{r}");
    let r = alg.operator_group_check(&eng, &SubgroupSpec::frft(), PI / 3.0, 0.0, &f).unwrap();
    assert!(r <= 1e-6, "{r}");
}

#[test]
fn operator_law_hyperbolic_bump() {
    // The hyperbolic pair stretches the bump's phase-space footprint, so the
    // grid is much wider than for the Gaussian.
    let f = Fixture::Bump.sample(Grid::new(256.0, 16384).unwrap()).unwrap();
    let r = Algebra::default()
        .operator_group_check(&Engine::default(), &spec(Family::III, 1.0, 1.0, 0.0), 0.4, 0.7, &f)
        .unwrap();
    assert!(r <= 1e-3, "{r}");
}

#[test]
fn apply_at_pole_is_limit() {
    let f = Fixture::Hermite4.sample(Grid::new(10.0, 512).unwrap()).unwrap();
    let g = Algebra::default().apply(&Engine::default(), &SubgroupSpec::frft(), PI, &f).unwrap();
    assert_eq!(g, f.reflected());
}
