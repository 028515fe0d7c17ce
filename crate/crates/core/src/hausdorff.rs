//! Exact Hausdorff distances on a metric graph.
//!
//! Finite-to-finite distances use the `O(|A|·|B|)` pair scan over the
//! precomputed vertex matrix. Continuum-to-finite distances are exact: on
//! each edge the distance to the sample is a lower envelope of slope ±1
//! pieces, so its supremum sits at an envelope breakpoint or an edge end.

use crate::exec::Execution;
use crate::metric_graph::{EdgeIntervalSet, EdgeProfile, GraphPoint, MetricGraph, PointSet};
use crate::{Error, Result};

/// `max_{a in A} min_{b in B} d(a, b)`.
pub fn directed_hausdorff_sets(graph: &MetricGraph, a: &PointSet, b: &PointSet) -> Result<f64> {
    directed_hausdorff_sets_with(graph, a, b, Execution::default())
}

pub fn directed_hausdorff_sets_with(
    graph: &MetricGraph,
    a: &PointSet,
    b: &PointSet,
    exec: Execution,
) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let targets = b.points();
    Ok(exec.max_by(a.points(), 0.0, |p| graph.distance_to_points(p, targets)))
}

pub fn hausdorff_sets(graph: &MetricGraph, a: &PointSet, b: &PointSet) -> Result<f64> {
    hausdorff_sets_with(graph, a, b, Execution::default())
}

pub fn hausdorff_sets_with(
    graph: &MetricGraph,
    a: &PointSet,
    b: &PointSet,
    exec: Execution,
) -> Result<f64> {
    let ab = directed_hausdorff_sets_with(graph, a, b, exec)?;
    let ba = directed_hausdorff_sets_with(graph, b, a, exec)?;
    Ok(ab.max(ba))
}

/// `d_H(G, A) = sup_{x in G} d(x, A)`; the other direction vanishes since `A ⊆ G`.
pub fn hausdorff_graph_to_set(graph: &MetricGraph, a: &PointSet) -> Result<f64> {
    hausdorff_graph_to_set_with(graph, a, Execution::default())
}

pub fn hausdorff_graph_to_set_with(
    graph: &MetricGraph,
    a: &PointSet,
    exec: Execution,
) -> Result<f64> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let sources = a.points();
    let per_edge = exec.map_range(graph.edge_count(), |i| {
        EdgeProfile::new(graph, crate::EdgeId(i), sources).sup()
    });
    // isolated-vertex graphs have no edges
    let vertex_sup = if graph.edge_count() == 0 {
        graph
            .vertex_ids()
            .map(|v| graph.vertex_to_points(v, sources))
            .fold(0.0, f64::max)
    } else {
        0.0
    };
    Ok(per_edge.into_iter().fold(vertex_sup, f64::max))
}

/// `sup_{x in G} d(x, closure(W))`.
pub fn hausdorff_graph_to_region(graph: &MetricGraph, region: &EdgeIntervalSet) -> Result<f64> {
    if region.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let sources = region.closure_sources(graph);
    let per_edge = graph.edge_ids().map(|e| {
        let covered = region.intervals(e);
        EdgeProfile::new(graph, e, &sources).sup_outside(covered)
    });
    let vertex_sup = graph
        .vertex_ids()
        .map(|v| graph.vertex_to_points(v, &sources))
        .fold(0.0, f64::max);
    Ok(per_edge.fold(vertex_sup, f64::max))
}

/// `max_{v in ∂G} d(v, A)`, and 0 when the graph has no leaves.
pub fn directed_hausdorff_boundary(graph: &MetricGraph, a: &PointSet) -> Result<f64> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(graph
        .boundary()
        .into_iter()
        .map(|v| graph.distance_to_points(&GraphPoint::Vertex(v), a.points()))
        .fold(0.0, f64::max))
}
