use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use metric_gh::gh_oracle::{gh_exact_with, restrict_metric};
use metric_gh::hausdorff::{hausdorff_graph_to_set_with, hausdorff_sets_with};
use metric_gh::{EdgeId, Execution, GraphBuilder, GraphPoint, MetricGraph, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn graph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> MetricGraph {
    let mut b = GraphBuilder::new().vertices((0..n).map(|i| format!("v{i}")));
    for k in 0..m {
        let (i, j) = if k + 1 < n {
            (k + 1, rng.random_range(0..=k))
        } else {
            (rng.random_range(0..n), rng.random_range(0..n))
        };
        b = b.edge(
            format!("e{k}"),
            format!("v{i}"),
            format!("v{j}"),
            rng.random_range(0.5..3.0),
        );
    }
    b.build().unwrap()
}

fn sample(rng: &mut ChaCha8Rng, g: &MetricGraph, k: usize) -> PointSet {
    PointSet::new(
        g,
        (0..k).map(|_| {
            let e = EdgeId(rng.random_range(0..g.edge_count()));
            GraphPoint::on_edge(g, e, rng.random_range(0.0..g.edge(e).length)).unwrap()
        }),
    )
    .unwrap()
}

fn bench_hausdorff_sets(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = graph(&mut rng, 60, 100);
    let mut group = c.benchmark_group("hausdorff_sets");
    for size in [500, 2000] {
        let (a, b) = (sample(&mut rng, &g, size), sample(&mut rng, &g, size));
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, size), &size, |bench, _| {
                bench.iter(|| hausdorff_sets_with(&g, black_box(&a), black_box(&b), mode).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_graph_to_set(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = graph(&mut rng, 60, 100);
    let a = sample(&mut rng, &g, 1000);
    let mut group = c.benchmark_group("hausdorff_graph_to_set");
    for (name, mode) in MODES {
        group.bench_function(name, |bench| {
            bench.iter(|| hausdorff_graph_to_set_with(&g, black_box(&a), mode).unwrap())
        });
    }
    group.finish();
}

fn bench_gh_exact(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = graph(&mut rng, 5, 7);
    let x = restrict_metric(&g, &sample(&mut rng, &g, 6)).unwrap();
    let y = restrict_metric(&g, &sample(&mut rng, &g, 6)).unwrap();
    let mut group = c.benchmark_group("gh_exact");
    for (name, mode) in MODES {
        group.bench_function(name, |bench| {
            bench.iter(|| gh_exact_with(black_box(&x), black_box(&y), f64::INFINITY, mode).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_hausdorff_sets,
    bench_graph_to_set,
    bench_gh_exact
);
criterion_main!(benches);
