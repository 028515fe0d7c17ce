#![allow(dead_code)]

use metric_gh::{EdgeId, GraphBuilder, GraphPoint, MetricGraph, PointSet, VertexId};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Connected multigraph with at most `max_edges` edges: a random spanning
/// tree plus extra edges that may be parallel or self-loops.
pub fn random_graph(rng: &mut ChaCha8Rng, max_edges: usize) -> MetricGraph {
    let n = rng.random_range(1..=max_edges.min(5));
    let tree_edges = n - 1;
    let extra_min = usize::from(n == 1);
    let extra = rng.random_range(extra_min..=(max_edges - tree_edges).max(extra_min));
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut b = GraphBuilder::new().vertices(names.iter().cloned());
    let mut k = 0;
    let len = |rng: &mut ChaCha8Rng| (rng.random_range(0.5..2.0f64) * 64.0).round() / 64.0;
    for i in 1..n {
        let j = rng.random_range(0..i);
        b = b.edge(
            format!("e{k}"),
            names[i].clone(),
            names[j].clone(),
            len(rng),
        );
        k += 1;
    }
    for _ in 0..extra {
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
        b = b.edge(
            format!("e{k}"),
            names[i].clone(),
            names[j].clone(),
            len(rng),
        );
        k += 1;
    }
    b.build().expect("random graph is valid")
}

pub fn random_point(rng: &mut ChaCha8Rng, g: &MetricGraph) -> GraphPoint {
    if rng.random_bool(0.25) {
        return GraphPoint::Vertex(VertexId(rng.random_range(0..g.vertex_count())));
    }
    let e = EdgeId(rng.random_range(0..g.edge_count()));
    let len = g.edge(e).length;
    GraphPoint::on_edge(g, e, rng.random_range(0.0..len)).unwrap()
}

/// Between 1 and `max` distinct points.
pub fn random_subset(rng: &mut ChaCha8Rng, g: &MetricGraph, max: usize) -> PointSet {
    let k = rng.random_range(1..=max);
    PointSet::new(g, (0..k).map(|_| random_point(rng, g))).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}
