use invlab::discrepancy::{
    lambda_monte_carlo, lambda_series, tau_sum, verify_l1_invariance, verify_l2_invariance,
    verify_l2_invariance_with,
};
use invlab::harmonic::KernelExpansion;
use invlab::spaces::{
    avg_sym_diff, avg_tau, gamma_const, sample, tau, PointSet, Provenance, RadialMeasure, Sampler,
    SpaceDescriptor,
};
use invlab::Error;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn space(s: &str) -> SpaceDescriptor {
    s.parse().unwrap()
}

fn points(label: &str, n: usize, seed: u64) -> PointSet {
    let s = space(label);
    let sampler = if s.supports_uniform_sampling() {
        Sampler::Uniform
    } else {
        Sampler::Chart
    };
    sample(&s, sampler, n, seed).unwrap()
}

fn duplicated(ps: &PointSet) -> PointSet {
    let mut pts = ps.points().to_vec();
    pts.extend_from_slice(ps.points());
    PointSet::new(*ps.space(), pts, Provenance::manual()).unwrap()
}

#[test]
fn tau_sum_examples() {
    let s = space("S2");
    let p = |v: [f64; 3]| invlab::spaces::Point::from_flat(&s, &v).unwrap();
    let one = PointSet::new(s, vec![p([0.0, 0.0, 1.0])], Provenance::manual()).unwrap();
    assert_eq!(tau_sum(&one).unwrap(), 0.0);
    let pair = PointSet::new(s, vec![p([0.0, 0.0, 1.0]), p([0.0, 0.0, -1.0])], Provenance::manual()).unwrap();
    assert_eq!(tau_sum(&pair).unwrap(), 2.0);

    // brute force over ordered pairs, and the Euclidean form on the sphere
    let ps = points("S2", 30, 2);
    let pts = ps.points();
    let mut brute = 0.0;
    let mut euclid = 0.0;
    for x in pts {
        for y in pts {
            brute += tau(x, y).unwrap();
            let (a, b) = (x.to_flat(), y.to_flat());
            euclid += a.iter().zip(&b).map(|(u, v)| (u - v).powi(2)).sum::<f64>().sqrt() / 2.0;
        }
    }
    let t = tau_sum(&ps).unwrap();
    assert!((t - brute).abs() < 1e-11 * t);
    assert!((t - euclid).abs() < 1e-11 * t);
}

#[test]
fn scale_law_under_duplication() {
    for label in ["S2", "RP3", "CP2", "HP2", "OP2"] {
        let ps = points(label, 10, 4);
        let dup = duplicated(&ps);
        let xi = RadialMeasure::natural();
        let (t1, t2) = (tau_sum(&ps).unwrap(), tau_sum(&dup).unwrap());
        assert!((t2 / t1 - 4.0).abs() < 1e-13, "{label}");
        let (l1, tail1) = lambda_series(&ps, &xi, 500).unwrap();
        let (l2, tail2) = lambda_series(&dup, &xi, 500).unwrap();
        assert!((l2 / l1 - 4.0).abs() < 1e-12, "{label}: {}", l2 / l1);
        assert!((tail2 / tail1 - 4.0).abs() < 1e-14);
    }
}

#[test]
fn permutation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for label in ["S3", "CP2", "OP2"] {
        let ps = points(label, 20, 6);
        let mut order: Vec<usize> = (0..ps.len()).collect();
        order.shuffle(&mut rng);
        let shuffled = ps.reordered(&order).unwrap();
        let a = verify_l2_invariance(&ps, 800).unwrap();
        let b = verify_l2_invariance(&shuffled, 800).unwrap();
        assert!((a.tau_sum - b.tau_sum).abs() <= 1e-13 * a.tau_sum, "{label}");
        assert!((a.lambda_series - b.lambda_series).abs() <= 1e-12 * a.lambda_series, "{label}");
        assert!((a.residual_rel - b.residual_rel).abs() <= 1e-12);
    }
}

#[test]
fn single_point_examples() {
    for label in ["S2", "CP2", "HP2", "OP2"] {
        let ps = points(label, 1, 1);
        let s = ps.space();
        let r = verify_l2_invariance(&ps, 2000).unwrap();
        assert!(r.residual_rel <= r.residual_bound + 1e-15, "{label}");
        let expected = avg_tau(s) / gamma_const(s);
        assert!((r.lambda_series - expected).abs() <= r.tail_bound / r.gamma + 1e-15);

        let xi = RadialMeasure::atoms(vec![(0.7, 1.0), (2.0, 0.5)]).unwrap();
        let l1 = verify_l1_invariance(&ps, &xi, 500).unwrap();
        assert_eq!(l1.sym_diff_series, 0.0);
        assert!((l1.lambda_series - avg_sym_diff(s, &xi).unwrap()).abs() <= l1.tail_bound);
    }
}

#[test]
fn three_way_agreement() {
    let xi = RadialMeasure::natural();
    for (label, seed) in [("RP3", 1u64), ("CP2", 2), ("HP2", 3), ("S4", 4)] {
        let ps = points(label, 12, seed);
        let kernel = KernelExpansion::build(ps.space(), &xi, 2000).unwrap();
        let r = verify_l2_invariance_with(&ps, &kernel, Some((40_000, seed))).unwrap();
        let gap = (r.lambda_series - r.lambda_by_invariance).abs();
        assert!(gap <= r.tail_bound / r.gamma, "{label}: {gap}");
        let mc = r.lambda_mc.unwrap();
        assert_eq!(mc.samples, 40_000);
        assert!((mc.estimate - r.lambda_series).abs() <= 4.0 * mc.std_error, "{label}: {mc:?} vs {}", r.lambda_series);
    }
    // OP2: series against invariance only
    let ps = points("OP2", 16, 5);
    let r = verify_l2_invariance(&ps, 2000).unwrap();
    assert!(r.residual_rel <= 1e-3);
    assert!((r.lambda_series - r.lambda_by_invariance).abs() <= r.tail_bound / r.gamma);
    let kernel = KernelExpansion::build(ps.space(), &xi, 100).unwrap();
    assert!(matches!(
        verify_l2_invariance_with(&ps, &kernel, Some((2000, 0))),
        Err(Error::UnsupportedSampler { .. })
    ));
}

#[test]
fn monte_carlo_examples() {
    let xi = RadialMeasure::natural();
    let one = points("S2", 1, 8);
    let mc = lambda_monte_carlo(&one, &xi, 50_000, 3).unwrap();
    assert!((mc.estimate - 1.0 / 3.0).abs() <= 4.0 * mc.std_error, "{mc:?}");

    // N copies of one point: N^2 ∫ (v - v^2) dξ
    let s = space("CP2");
    let p = sample(&s, Sampler::Uniform, 1, 0).unwrap().into_points().remove(0);
    let copies = PointSet::new(s, vec![p; 5], Provenance::manual()).unwrap();
    let xi_atoms = RadialMeasure::atoms(vec![(1.0, 1.0), (2.2, 2.0)]).unwrap();
    for xi in [&xi, &xi_atoms] {
        let mc = lambda_monte_carlo(&copies, xi, 20_000, 9).unwrap();
        let expected = 25.0 * avg_sym_diff(&s, xi).unwrap();
        assert!((mc.estimate - expected).abs() <= 4.0 * mc.std_error, "{mc:?} vs {expected}");
    }

    assert!(lambda_monte_carlo(&one, &xi, 999, 0).is_err());
    // independent of the thread count
    let ps = points("RP2", 9, 2);
    let a = lambda_monte_carlo(&ps, &xi, 5000, 1).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let b = pool.install(|| lambda_monte_carlo(&ps, &xi, 5000, 1).unwrap());
    assert_eq!(a, b);
}

#[test]
fn monotone_refinement() {
    for label in ["S2", "CP2", "OP2"] {
        let ps = points(label, 32, 10);
        let mut prev = f64::INFINITY;
        for l in [250, 500, 1000, 2000, 4000] {
            let r = verify_l2_invariance(&ps, l).unwrap();
            assert!(r.residual_rel <= r.residual_bound, "{label} L={l}");
            assert!(r.residual_rel <= prev * 1.05, "{label} L={l}: {} after {prev}", r.residual_rel);
            prev = r.residual_rel;
        }
    }
}

#[test]
fn l1_invariance_for_general_measures() {
    let ps = points("S2", 8, 12);
    let atom = RadialMeasure::atom(std::f64::consts::FRAC_PI_2, 1.0).unwrap();
    let r = verify_l1_invariance(&ps, &atom, 2000).unwrap();
    assert!(r.residual_rel <= r.residual_bound, "{r:?}");

    let table = RadialMeasure::tabulated(vec![0.0, 1.5, std::f64::consts::PI], vec![1.0, 0.2, 1.0]).unwrap();
    for label in ["RP2", "CP3", "HP2", "OP2"] {
        let ps = points(label, 10, 3);
        for xi in [&atom, &table] {
            let r = verify_l1_invariance(&ps, xi, 1000).unwrap();
            assert!(r.residual_rel <= r.residual_bound + 1e-14, "{label}: {r:?}");
            assert!(r.lambda_series >= -r.tail_bound);
        }
    }

    // ξ♮: the L1 form times γ is the L2 identity
    let ps = points("HP2", 10, 7);
    let l1 = verify_l1_invariance(&ps, &RadialMeasure::natural(), 2000).unwrap();
    let l2 = verify_l2_invariance(&ps, 2000).unwrap();
    let g = l2.gamma;
    assert_eq!(l1.lambda_series, l2.lambda_series);
    assert!((g * l1.avg_sym_diff - l2.avg_tau).abs() < 1e-12);
    assert!((g * l1.sym_diff_series - l2.tau_sum).abs() <= g * l1.tail_bound);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn discrepancy_is_nonnegative(seed in any::<u64>(), n in 1usize..12, which in 0usize..4) {
        let label = ["S2", "RP2", "CP2", "OP2"][which];
        let ps = points(label, n, seed);
        let (lambda, tail) = lambda_series(&ps, &RadialMeasure::natural(), 300).unwrap();
        prop_assert!(lambda >= -tail);
        let r = verify_l2_invariance(&ps, 300).unwrap();
        prop_assert!(r.residual_rel <= r.residual_bound + 1e-14);
    }
}
