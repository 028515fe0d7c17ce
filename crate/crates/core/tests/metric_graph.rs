mod common;

use metric_gh::{GraphPoint, MetricGraph, PointSet};
use proptest::prelude::*;

fn sample_points(seed: u64, k: usize) -> (MetricGraph, Vec<GraphPoint>) {
    let mut rng = common::rng(seed);
    let g = common::random_graph(&mut rng, 8);
    let pts = (0..k).map(|_| common::random_point(&mut rng, &g)).collect();
    (g, pts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn metric_axioms(seed in any::<u64>()) {
        let (g, pts) = sample_points(seed, 3);
        let d = |a: &GraphPoint, b: &GraphPoint| g.point_distance(a, b).unwrap();
        let (p, q, w) = (&pts[0], &pts[1], &pts[2]);
        prop_assert!(d(p, q) >= 0.0);
        prop_assert_eq!(d(p, p), 0.0);
        prop_assert_eq!(d(p, q) == 0.0, p == q);
        prop_assert!((d(p, q) - d(q, p)).abs() <= 1e-12);
        prop_assert!(d(p, w) <= d(p, q) + d(q, w) + 1e-9);
    }

    #[test]
    fn scaling_by_powers_of_two_is_exact(seed in any::<u64>(), k in -3i32..=3) {
        let lambda = 2f64.powi(k);
        let (g, pts) = sample_points(seed, 4);
        let s = g.scaled(lambda).unwrap();
        let moved: Vec<GraphPoint> = pts
            .iter()
            .map(|p| match *p {
                GraphPoint::Vertex(v) => GraphPoint::Vertex(v),
                GraphPoint::Edge { edge, offset } => GraphPoint::on_edge(&s, edge, offset * lambda).unwrap(),
            })
            .collect();
        for (a, b) in pts.iter().zip(&moved) {
            for (c, e) in pts.iter().zip(&moved) {
                prop_assert_eq!(s.point_distance(b, e).unwrap(), lambda * g.point_distance(a, c).unwrap());
            }
        }
        let set = PointSet::new(&g, pts.clone()).unwrap();
        let set_s = PointSet::new(&s, moved).unwrap();
        prop_assert_eq!(s.set_diameter(&set_s).unwrap(), lambda * g.set_diameter(&set).unwrap());
        prop_assert_eq!(s.graph_diameter(), lambda * g.graph_diameter());
        prop_assert_eq!(s.smallest_nonterminal_edge(), g.smallest_nonterminal_edge().map(|e| e * lambda));
    }

    #[test]
    fn thickening_is_monotone(seed in any::<u64>(), r1 in 0.01f64..3.0, extra in 0.0f64..2.0) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let a = common::random_subset(&mut rng, &g, 4);
        let small = g.thickening(&a, r1).unwrap();
        let large = g.thickening(&a, r1 + extra).unwrap();
        prop_assert!(small.is_subset_of(&large));
        prop_assert!(small.measure() <= large.measure() + 1e-12);
    }

    #[test]
    fn thickened_points_are_within_radius(seed in any::<u64>(), r in 0.05f64..2.0) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 6);
        let a = common::random_subset(&mut rng, &g, 3);
        let t = g.thickening(&a, r).unwrap();
        for _ in 0..20 {
            let p = common::random_point(&mut rng, &g);
            let d = g.distance_to_set(&p, &a).unwrap();
            // membership agrees with the open-ball definition away from the boundary
            if (d - r).abs() > 1e-9 {
                prop_assert_eq!(t.contains(&p), d < r);
            }
        }
    }

    #[test]
    fn loops_are_unique_and_long_enough(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 7);
        let loops = g.enumerate_simple_loops().unwrap();
        for (i, a) in loops.iter().enumerate() {
            for b in &loops[i + 1..] {
                prop_assert_ne!(a, b);
            }
            if a.len() == 1 {
                prop_assert!(a.length >= g.smallest_nonterminal_edge().unwrap());
            }
        }
        prop_assert_eq!(loops.is_empty(), g.is_tree());
    }
}

#[test]
fn diameter_dominates_sampled_pairs() {
    for seed in 0..40 {
        let (g, pts) = sample_points(seed, 30);
        let diam = g.graph_diameter();
        let set = PointSet::new(&g, pts).unwrap();
        assert!(g.set_diameter(&set).unwrap() <= diam + 1e-12);
    }
}
