mod common;

use metric_gh::gh_oracle::{distortion, gh_exact, is_isometric, restrict_metric, DEFAULT_GUARD};
use metric_gh::hausdorff::hausdorff_sets;
use metric_gh::{Correspondence, Execution, FiniteMetricSpace};
use proptest::prelude::*;
use rand::Rng;

fn random_space(seed: u64, max: usize) -> FiniteMetricSpace {
    let mut rng = common::rng(seed);
    let g = common::random_graph(&mut rng, 6);
    restrict_metric(&g, &common::random_subset(&mut rng, &g, max)).unwrap()
}

fn scaled(s: &FiniteMetricSpace, lambda: f64) -> FiniteMetricSpace {
    FiniteMetricSpace::new(s.len(), s.matrix().iter().map(|d| d * lambda).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn witness_certifies_value(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (random_space(a, 4), random_space(b, 4));
        let sol = gh_exact(&x, &y, DEFAULT_GUARD).unwrap();
        prop_assert_eq!(distortion(&sol.witness, &x, &y).unwrap(), 2.0 * sol.value);
        prop_assert_eq!(gh_exact(&x, &x, DEFAULT_GUARD).unwrap().value, 0.0);
    }

    #[test]
    fn shrinking_a_correspondence_never_hurts(a in any::<u64>(), b in any::<u64>(), extra in proptest::collection::vec((0usize..4, 0usize..4), 0..6)) {
        let (x, y) = (random_space(a, 4), random_space(b, 4));
        let sol = gh_exact(&x, &y, DEFAULT_GUARD).unwrap();
        let mut pairs = sol.witness.pairs.clone();
        pairs.extend(extra.into_iter().filter(|&(i, j)| i < x.len() && j < y.len()));
        let bigger = Correspondence::new(pairs);
        prop_assert!(distortion(&sol.witness, &x, &y).unwrap() <= distortion(&bigger, &x, &y).unwrap());
    }

    #[test]
    fn never_exceeds_co_embedded_hausdorff(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let a = common::random_subset(&mut rng, &g, 4);
        let b = common::random_subset(&mut rng, &g, 4);
        let gh = gh_exact(&restrict_metric(&g, &a).unwrap(), &restrict_metric(&g, &b).unwrap(), DEFAULT_GUARD).unwrap();
        prop_assert!(gh.value <= hausdorff_sets(&g, &a, &b).unwrap() + 1e-12);
    }

    #[test]
    fn scales_linearly(a in any::<u64>(), b in any::<u64>(), k in -2i32..=2) {
        let lambda = 2f64.powi(k);
        let (x, y) = (random_space(a, 4), random_space(b, 3));
        let base = gh_exact(&x, &y, DEFAULT_GUARD).unwrap().value;
        let s = gh_exact(&scaled(&x, lambda), &scaled(&y, lambda), DEFAULT_GUARD).unwrap().value;
        prop_assert_eq!(s, lambda * base);
    }

    #[test]
    fn invariant_under_relabelling(a in any::<u64>(), b in any::<u64>(), seed in any::<u64>()) {
        let (x, y) = (random_space(a, 4), random_space(b, 4));
        let mut rng = common::rng(seed);
        let mut perm: Vec<usize> = (0..x.len()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        let px = x.permuted(&perm);
        prop_assert!(is_isometric(&x, &px, 64).unwrap().is_some());
        prop_assert_eq!(gh_exact(&px, &y, DEFAULT_GUARD).unwrap().value, gh_exact(&x, &y, DEFAULT_GUARD).unwrap().value);
    }
}

#[test]
fn execution_modes_find_the_same_witness() {
    for seed in 0..30 {
        let (x, y) = (random_space(seed, 5), random_space(seed + 1000, 5));
        let seq = metric_gh::gh_oracle::gh_exact_with(&x, &y, DEFAULT_GUARD, Execution::Sequential)
            .unwrap();
        let par = metric_gh::gh_oracle::gh_exact_with(&x, &y, DEFAULT_GUARD, Execution::Parallel)
            .unwrap();
        assert_eq!(seq, par);
    }
}

#[test]
fn triangle_inequality_on_triples() {
    for seed in 0..60 {
        let s: Vec<FiniteMetricSpace> = (0..3).map(|i| random_space(seed * 3 + i, 3)).collect();
        let gh = |i: usize, j: usize| gh_exact(&s[i], &s[j], DEFAULT_GUARD).unwrap().value;
        assert!(gh(0, 2) <= gh(0, 1) + gh(1, 2) + 1e-12);
    }
}
