use std::collections::HashSet;

use super::{EdgeId, MetricGraph, VertexId};
use crate::{Error, Result};

/// A location on a metric graph.
///
/// Points are kept in canonical form: an `Edge` point always has an offset
/// strictly inside its edge, endpoints are stored as `Vertex`. Offsets are
/// measured from the edge's `u` endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphPoint {
    Vertex(VertexId),
    Edge { edge: EdgeId, offset: f64 },
}

impl GraphPoint {
    /// Canonical point at `offset` along `edge`.
    pub fn on_edge(graph: &MetricGraph, edge: EdgeId, offset: f64) -> Result<Self> {
        let Some(e) = graph.edges().get(edge.0) else {
            return Err(Error::PointNotOnGraph(format!("edge #{}", edge.0)));
        };
        if !(0.0..=e.length).contains(&offset) {
            return Err(Error::PointNotOnGraph(format!(
                "offset {offset} outside [0, {}] on edge `{}`",
                e.length, e.name
            )));
        }
        Ok(if offset == 0.0 {
            GraphPoint::Vertex(e.u)
        } else if offset == e.length {
            GraphPoint::Vertex(e.v)
        } else {
            GraphPoint::Edge { edge, offset }
        })
    }

    pub fn vertex(graph: &MetricGraph, v: VertexId) -> Result<Self> {
        let p = GraphPoint::Vertex(v);
        graph.check_point(&p)?;
        Ok(p)
    }

    /// Edge and offset of this point, choosing any incident edge for a vertex.
    pub fn edge_position(&self, graph: &MetricGraph) -> Option<(EdgeId, f64)> {
        match *self {
            GraphPoint::Edge { edge, offset } => Some((edge, offset)),
            GraphPoint::Vertex(v) => {
                let &e = graph.incident_edges(v).first()?;
                let offset = if graph.edge(e).u == v {
                    0.0
                } else {
                    graph.edge(e).length
                };
                Some((e, offset))
            }
        }
    }

    fn key(&self) -> (u8, usize, u64) {
        match *self {
            GraphPoint::Vertex(v) => (0, v.0, 0),
            GraphPoint::Edge { edge, offset } => (1, edge.0, offset.to_bits()),
        }
    }
}

impl Eq for GraphPoint {}

impl std::hash::Hash for GraphPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

/// A finite subset of a metric graph, deduplicated, in insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PointSet {
    points: Vec<GraphPoint>,
}

impl PointSet {
    /// Validates every point against `graph` and drops duplicates.
    pub fn new(graph: &MetricGraph, points: impl IntoIterator<Item = GraphPoint>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for p in points {
            graph.check_point(&p)?;
            if seen.insert(p) {
                out.push(p);
            }
        }
        Ok(Self { points: out })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn vertices(graph: &MetricGraph) -> Self {
        Self {
            points: graph.vertex_ids().map(GraphPoint::Vertex).collect(),
        }
    }

    /// Points at the given offsets along a single edge.
    pub fn from_offsets(graph: &MetricGraph, edge: EdgeId, offsets: &[f64]) -> Result<Self> {
        let pts = offsets
            .iter()
            .map(|&o| GraphPoint::on_edge(graph, edge, o))
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, pts)
    }

    pub fn points(&self) -> &[GraphPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &GraphPoint) -> bool {
        self.points.contains(p)
    }

    /// Set union, keeping `self`'s order first.
    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut seen: HashSet<GraphPoint> = self.points.iter().copied().collect();
        let mut points = self.points.clone();
        points.extend(other.points.iter().copied().filter(|p| seen.insert(*p)));
        PointSet { points }
    }

    /// Equality as sets, ignoring order.
    pub fn same_set(&self, other: &PointSet) -> bool {
        let a: HashSet<_> = self.points.iter().collect();
        let b: HashSet<_> = other.points.iter().collect();
        a == b
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a GraphPoint;
    type IntoIter = std::slice::Iter<'a, GraphPoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_canonicalize_to_vertices() {
        let g = MetricGraph::segment(2.0).unwrap();
        assert_eq!(
            GraphPoint::on_edge(&g, EdgeId(0), 0.0).unwrap(),
            GraphPoint::Vertex(VertexId(0))
        );
        assert_eq!(
            GraphPoint::on_edge(&g, EdgeId(0), 2.0).unwrap(),
            GraphPoint::Vertex(VertexId(1))
        );
        assert!(GraphPoint::on_edge(&g, EdgeId(0), 2.5).is_err());
        assert!(GraphPoint::on_edge(&g, EdgeId(3), 0.5).is_err());
    }

    #[test]
    fn self_loop_ends_are_the_same_vertex() {
        let g = MetricGraph::circle(1.0).unwrap();
        let a = GraphPoint::on_edge(&g, EdgeId(0), 0.0).unwrap();
        let b = GraphPoint::on_edge(&g, EdgeId(0), 1.0).unwrap();
        assert_eq!(a, b);
        let set = PointSet::new(&g, [a, b]).unwrap();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn non_canonical_points_are_rejected() {
        let g = MetricGraph::segment(1.0).unwrap();
        let raw = GraphPoint::Edge {
            edge: EdgeId(0),
            offset: 1.0,
        };
        assert!(PointSet::new(&g, [raw]).is_err());
    }

    #[test]
    fn dedup_keeps_first_occurrence_order() {
        let g = MetricGraph::segment(1.0).unwrap();
        let set = PointSet::from_offsets(&g, EdgeId(0), &[0.5, 0.0, 0.5, 1.0, 0.0]).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(set.points()[1], GraphPoint::Vertex(VertexId(0)));
        let other = PointSet::from_offsets(&g, EdgeId(0), &[1.0, 0.0, 0.5]).unwrap();
        assert!(set.same_set(&other));
    }
}
