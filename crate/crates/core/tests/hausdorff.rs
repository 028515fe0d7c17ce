mod common;

use metric_gh::constructions::epsilon_net;
use metric_gh::hausdorff::{
    directed_hausdorff_sets, hausdorff_graph_to_region, hausdorff_graph_to_set, hausdorff_sets,
    hausdorff_sets_with,
};
use metric_gh::{EdgeIntervalSet, Execution, GraphPoint, PointSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn symmetric_and_triangle(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let sets: Vec<PointSet> = (0..3).map(|_| common::random_subset(&mut rng, &g, 5)).collect();
        let h = |i: usize, j: usize| hausdorff_sets(&g, &sets[i], &sets[j]).unwrap();
        prop_assert!(directed_hausdorff_sets(&g, &sets[0], &sets[1]).unwrap() <= h(0, 1));
        prop_assert_eq!(h(0, 1), h(1, 0));
        prop_assert!(h(0, 2) <= h(0, 1) + h(1, 2) + 1e-9);
        prop_assert_eq!(h(0, 0), 0.0);
        prop_assert_eq!(h(0, 1) == 0.0, sets[0].same_set(&sets[1]));
    }

    #[test]
    fn continuum_dominates_finite_samples(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let a = common::random_subset(&mut rng, &g, 4);
        let probe = PointSet::new(&g, (0..50).map(|_| common::random_point(&mut rng, &g))).unwrap();
        let cont = hausdorff_graph_to_set(&g, &a).unwrap();
        prop_assert!(directed_hausdorff_sets(&g, &probe, &a).unwrap() <= cont + 1e-12);
        // a fine net nearly attains the supremum
        let net = epsilon_net(&g, 0.01).unwrap();
        prop_assert!(directed_hausdorff_sets(&g, &net, &a).unwrap() >= cont - 0.01 - 1e-12);
    }

    #[test]
    fn region_from_points_matches_sample_distance(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let a = common::random_subset(&mut rng, &g, 4);
        let mut region = EdgeIntervalSet::empty(&g);
        for p in &a {
            match *p {
                GraphPoint::Vertex(v) => region.insert_vertex(v),
                GraphPoint::Edge { edge, offset } => {
                    // a degenerate sliver standing in for the point
                    let len = g.edge(edge).length;
                    let (lo, hi) = ((offset - 1e-7).max(0.0), (offset + 1e-7).min(len));
                    region.insert_interval(&g, edge, lo, hi).unwrap();
                }
            }
        }
        let via_region = hausdorff_graph_to_region(&g, &region).unwrap();
        prop_assert!((via_region - hausdorff_graph_to_set(&g, &a).unwrap()).abs() <= 1e-6);
    }

    #[test]
    fn nets_are_dense(seed in any::<u64>(), eps in 0.05f64..1.5) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let net = epsilon_net(&g, eps).unwrap();
        prop_assert!(hausdorff_graph_to_set(&g, &net).unwrap() <= eps + 1e-9);
    }

    #[test]
    fn scaling_is_exact(seed in any::<u64>(), k in -2i32..=2) {
        let lambda = 2f64.powi(k);
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let s = g.scaled(lambda).unwrap();
        let a = common::random_subset(&mut rng, &g, 4);
        let b = common::random_subset(&mut rng, &g, 4);
        let lift = |set: &PointSet| {
            PointSet::new(&s, set.points().iter().map(|p| match *p {
                GraphPoint::Vertex(v) => GraphPoint::Vertex(v),
                GraphPoint::Edge { edge, offset } => GraphPoint::on_edge(&s, edge, offset * lambda).unwrap(),
            }))
            .unwrap()
        };
        let (sa, sb) = (lift(&a), lift(&b));
        prop_assert_eq!(hausdorff_sets(&s, &sa, &sb).unwrap(), lambda * hausdorff_sets(&g, &a, &b).unwrap());
        prop_assert_eq!(
            directed_hausdorff_sets(&s, &sa, &sb).unwrap(),
            lambda * directed_hausdorff_sets(&g, &a, &b).unwrap()
        );
        prop_assert_eq!(hausdorff_graph_to_set(&s, &sa).unwrap(), lambda * hausdorff_graph_to_set(&g, &a).unwrap());
    }
}

#[test]
fn execution_modes_agree_on_large_sets() {
    let mut rng = common::rng(11);
    let g = common::random_graph(&mut rng, 6);
    let a = PointSet::new(&g, (0..500).map(|_| common::random_point(&mut rng, &g))).unwrap();
    let b = PointSet::new(&g, (0..500).map(|_| common::random_point(&mut rng, &g))).unwrap();
    assert_eq!(
        hausdorff_sets_with(&g, &a, &b, Execution::Sequential).unwrap(),
        hausdorff_sets_with(&g, &a, &b, Execution::Parallel).unwrap()
    );
}
