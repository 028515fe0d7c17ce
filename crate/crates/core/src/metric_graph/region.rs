use super::{EdgeId, EdgeProfile, GraphPoint, MetricGraph, PointSet, VertexId};
use crate::{Error, Result};

/// A subset of a metric graph made of open intervals on edges plus a set of
/// included vertices.
///
/// Intervals `(lo, hi)` on an edge are sorted, pairwise disjoint and satisfy
/// `0 <= lo < hi <= length`. An interval reaching an edge end does not by
/// itself include the end vertex; vertex membership is tracked separately.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeIntervalSet {
    intervals: Vec<Vec<(f64, f64)>>,
    vertices: Vec<bool>,
}

impl EdgeIntervalSet {
    pub fn empty(graph: &MetricGraph) -> Self {
        Self {
            intervals: vec![Vec::new(); graph.edge_count()],
            vertices: vec![false; graph.vertex_count()],
        }
    }

    pub fn whole(graph: &MetricGraph) -> Self {
        Self {
            intervals: graph
                .edges()
                .iter()
                .map(|e| vec![(0.0, e.length)])
                .collect(),
            vertices: vec![true; graph.vertex_count()],
        }
    }

    /// Adds the open interval `(lo, hi)` on `edge`, merging with overlaps.
    pub fn insert_interval(
        &mut self,
        graph: &MetricGraph,
        edge: EdgeId,
        lo: f64,
        hi: f64,
    ) -> Result<()> {
        let len = graph
            .edges()
            .get(edge.0)
            .ok_or_else(|| Error::PointNotOnGraph(format!("edge #{}", edge.0)))?
            .length;
        if !(0.0 <= lo && lo < hi && hi <= len) {
            return Err(Error::InvalidParameter(format!(
                "interval ({lo}, {hi}) is not inside edge of length {len}"
            )));
        }
        let list = &mut self.intervals[edge.0];
        list.push((lo, hi));
        list.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(list.len());
        for &(lo, hi) in list.iter() {
            match merged.last_mut() {
                Some(last) if lo < last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        *list = merged;
        Ok(())
    }

    pub fn insert_vertex(&mut self, v: VertexId) {
        self.vertices[v.0] = true;
    }

    /// Adds the closed sub-segment `[lo, hi]` of `edge` (its interior plus
    /// any endpoint vertices it touches).
    pub fn insert_closed(
        &mut self,
        graph: &MetricGraph,
        edge: EdgeId,
        lo: f64,
        hi: f64,
    ) -> Result<()> {
        self.insert_interval(graph, edge, lo, hi)?;
        let e = graph.edge(edge);
        if lo == 0.0 {
            self.insert_vertex(e.u);
        }
        if hi == e.length {
            self.insert_vertex(e.v);
        }
        Ok(())
    }

    pub fn intervals(&self, edge: EdgeId) -> &[(f64, f64)] {
        &self.intervals[edge.0]
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices[v.0]
    }

    pub fn included_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, &inc)| inc)
            .map(|(i, _)| VertexId(i))
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.iter().all(Vec::is_empty) && !self.vertices.iter().any(|&v| v)
    }

    pub fn contains(&self, p: &GraphPoint) -> bool {
        match *p {
            GraphPoint::Vertex(v) => self.vertices[v.0],
            GraphPoint::Edge { edge, offset } => self.intervals[edge.0]
                .iter()
                .any(|&(lo, hi)| lo < offset && offset < hi),
        }
    }

    /// Interval-wise containment.
    pub fn is_subset_of(&self, other: &EdgeIntervalSet) -> bool {
        let vertices_ok = self
            .vertices
            .iter()
            .zip(&other.vertices)
            .all(|(&a, &b)| !a || b);
        vertices_ok
            && self
                .intervals
                .iter()
                .zip(&other.intervals)
                .all(|(mine, theirs)| {
                    mine.iter()
                        .all(|&(lo, hi)| theirs.iter().any(|&(olo, ohi)| olo <= lo && hi <= ohi))
                })
    }

    /// Total length covered by the intervals.
    pub fn measure(&self) -> f64 {
        self.intervals
            .iter()
            .flatten()
            .map(|(lo, hi)| hi - lo)
            .sum()
    }

    /// Finite set whose distance function agrees with that of the closure
    /// away from the covered intervals: interval endpoints plus included vertices.
    pub(crate) fn closure_sources(&self, graph: &MetricGraph) -> Vec<GraphPoint> {
        let mut out: Vec<GraphPoint> = self.included_vertices().map(GraphPoint::Vertex).collect();
        for (i, list) in self.intervals.iter().enumerate() {
            for &(lo, hi) in list {
                for t in [lo, hi] {
                    // endpoints lie on the edge by construction
                    out.push(
                        GraphPoint::on_edge(graph, EdgeId(i), t)
                            .expect("interval endpoint on edge"),
                    );
                }
            }
        }
        out
    }

    /// Whether the region is path-connected as a subspace of the graph.
    ///
    /// Pieces are the open intervals and the included vertices. Two open
    /// intervals never touch each other (on the same edge they are disjoint
    /// and a shared endpoint is not in the set), so the only glue is an
    /// interval reaching an included end vertex. The empty region counts as
    /// connected.
    pub fn is_connected(&self, graph: &MetricGraph) -> bool {
        let n_vertices = self.vertices.len();
        let mut parent: Vec<usize> = (0..n_vertices).collect();
        let mut members = Vec::new();
        for (v, &inc) in self.vertices.iter().enumerate() {
            if inc {
                members.push(v);
            }
        }
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, list) in self.intervals.iter().enumerate() {
            let e = graph.edge(EdgeId(i));
            for &(lo, hi) in list {
                let node = parent.len();
                parent.push(node);
                members.push(node);
                let glue = |v: VertexId, parent: &mut Vec<usize>| {
                    if self.vertices[v.0] {
                        let (a, b) = (find(parent, node), find(parent, v.0));
                        parent[a] = b;
                    }
                };
                if lo == 0.0 {
                    glue(e.u, &mut parent);
                }
                if hi == e.length {
                    glue(e.v, &mut parent);
                }
            }
        }
        let Some(&first) = members.first() else {
            return true;
        };
        let root = find(&mut parent, first);
        members.iter().all(|&m| find(&mut parent, m) == root)
    }
}

impl MetricGraph {
    /// Union of open balls of radius `r` around the points of `set`.
    pub fn thickening(&self, set: &PointSet, r: f64) -> Result<EdgeIntervalSet> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        if !(r > 0.0) {
            return Err(Error::NonPositiveRadius(r));
        }
        let sources = set.points();
        let intervals = self
            .edge_ids()
            .map(|e| EdgeProfile::new(self, e, sources).sublevel(r))
            .collect();
        let vertices = self
            .vertex_ids()
            .map(|v| self.vertex_to_points(v, sources) < r)
            .collect();
        Ok(EdgeIntervalSet {
            intervals,
            vertices,
        })
    }

    pub fn region_is_connected(&self, region: &EdgeIntervalSet) -> bool {
        region.is_connected(self)
    }
}
