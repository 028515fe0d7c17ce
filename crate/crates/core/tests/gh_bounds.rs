mod common;

use metric_gh::constructions::epsilon_net;
use metric_gh::gh_bounds::{
    best_bound, circle_pair_bound_with_slack, graph_pair_bound_with_slack, interval_gh_exact,
    segment_offsets, tree_equality, tree_pair_bound_with_slack,
};
use metric_gh::gh_oracle::{gh_exact, restrict_metric, DEFAULT_GUARD};
use metric_gh::hausdorff::hausdorff_graph_to_set;
use metric_gh::{BoundKind, EdgeId, MetricGraph, PointSet, Target, TAU};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn certificates_are_sound_and_consistent(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let x = common::random_subset(&mut rng, &g, 4);
        let y = common::random_subset(&mut rng, &g, 4);
        let gh = gh_exact(&restrict_metric(&g, &x).unwrap(), &restrict_metric(&g, &y).unwrap(), DEFAULT_GUARD)
            .unwrap()
            .value;
        for c in best_bound(&g, &x, Some(&y)).unwrap() {
            prop_assert_eq!(c.target, Target::SubsetPair);
            prop_assert!(c.value <= gh + TAU, "{} = {} > {}", c.theorem, c.value, gh);
            prop_assert!(c.value <= c.upper_bound.unwrap() + TAU);
        }
        for c in best_bound(&g, &x, None).unwrap() {
            let upper = c.upper_bound.unwrap();
            prop_assert!(c.value <= upper + TAU);
            if c.kind == BoundKind::ExactValue {
                prop_assert!((c.value - upper).abs() <= TAU);
            }
            if c.kind == BoundKind::Inapplicable {
                prop_assert_eq!(c.value, 0.0);
            }
        }
    }

    #[test]
    fn interval_formula_is_translation_and_scale_covariant(
        xs in proptest::collection::vec(0.0f64..1.0, 1..6),
        shift in -5.0f64..5.0,
        k in -2i32..=2,
    ) {
        let base = interval_gh_exact(0.0, 1.0, &xs).unwrap();
        let moved: Vec<f64> = xs.iter().map(|x| x + shift).collect();
        prop_assert!((interval_gh_exact(shift, 1.0 + shift, &moved).unwrap() - base).abs() <= 1e-12);
        let lambda = 2f64.powi(k);
        let scaled: Vec<f64> = xs.iter().map(|x| x * lambda).collect();
        prop_assert_eq!(interval_gh_exact(0.0, lambda, &scaled).unwrap(), lambda * base);
    }

    #[test]
    fn tree_theorem_agrees_with_interval_formula(len in 0.5f64..3.0, offsets in proptest::collection::vec(0.0f64..1.0, 1..6)) {
        let seg = MetricGraph::segment(len).unwrap();
        let pts: Vec<f64> = offsets.iter().map(|t| t * len).collect();
        let x = PointSet::from_offsets(&seg, EdgeId(0), &pts).unwrap();
        let cert = tree_equality(&seg, &x).unwrap();
        if cert.is_applicable() {
            let closed = interval_gh_exact(0.0, len, &segment_offsets(&seg, &x).unwrap()).unwrap();
            prop_assert!((cert.value - closed).abs() <= TAU);
        }
    }

    #[test]
    fn more_slack_never_helps(seed in any::<u64>(), grow in 0.0f64..0.5) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let x = common::random_subset(&mut rng, &g, 4);
        let y = epsilon_net(&g, 0.2).unwrap();
        let eps = hausdorff_graph_to_set(&g, &y).unwrap();
        let tight = graph_pair_bound_with_slack(&g, &x, &y, eps).unwrap();
        let loose = graph_pair_bound_with_slack(&g, &x, &y, eps + grow).unwrap();
        prop_assert!(loose.value <= tight.value);
        if g.is_tree() {
            let t1 = tree_pair_bound_with_slack(&g, &x, &y, eps).unwrap();
            let t2 = tree_pair_bound_with_slack(&g, &x, &y, eps + grow).unwrap();
            prop_assert!(t2.value <= t1.value);
        }
        if g.is_circle() {
            let c1 = circle_pair_bound_with_slack(&g, &x, &y, eps).unwrap();
            let c2 = circle_pair_bound_with_slack(&g, &x, &y, eps + grow).unwrap();
            prop_assert!(c2.value <= c1.value);
        }
        prop_assert!(graph_pair_bound_with_slack(&g, &x, &y, eps - 0.1).is_err());
    }
}

#[test]
fn sparser_nets_give_weaker_pair_bounds_on_a_segment() {
    let seg = MetricGraph::segment(2.0).unwrap();
    let x = PointSet::vertices(&seg);
    let mut last = f64::INFINITY;
    for eps in [0.0625, 0.125, 0.25, 0.5] {
        let y = epsilon_net(&seg, eps).unwrap();
        let v = tree_pair_bound_with_slack(&seg, &x, &y, eps).unwrap().value;
        assert!(v <= last);
        last = v;
    }
}
