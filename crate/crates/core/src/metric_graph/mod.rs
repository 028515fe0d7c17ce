//! Compact connected metric graphs with exact geodesic distances.
//!
//! A [`MetricGraph`] is a finite multigraph whose edges are metric segments.
//! Self-loops and parallel edges are allowed. All-pairs vertex distances are
//! computed once at build time; every point query afterwards is a closed-form
//! minimum over the (at most four) ways of leaving the two edges involved.

mod geometry;
mod loops;
mod point;
mod region;

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

use crate::exec::Execution;
use crate::{Error, Result};

pub use geometry::DistanceRange;
pub(crate) use geometry::EdgeProfile;
pub use loops::{Direction, SimpleLoop, DEFAULT_LOOP_CAP};
pub use point::{GraphPoint, PointSet};
pub use region::EdgeIntervalSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub name: String,
    pub u: VertexId,
    pub v: VertexId,
    pub length: f64,
}

impl Edge {
    pub fn is_self_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Declarative input for [`MetricGraph::build`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    vertices: Vec<String>,
    edges: Vec<(String, String, String, f64)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.vertices.push(name.into());
        self
    }

    pub fn vertices<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.vertices.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn edge(
        mut self,
        name: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
        length: f64,
    ) -> Self {
        self.edges.push((name.into(), u.into(), v.into(), length));
        self
    }

    pub fn build(self) -> Result<MetricGraph> {
        MetricGraph::build(self)
    }
}

#[derive(Debug, Clone)]
pub struct MetricGraph {
    vertex_names: Vec<String>,
    edges: Vec<Edge>,
    /// Row-major `n × n` geodesic distances between vertices.
    dist: Vec<f64>,
    degree: Vec<usize>,
    incident: Vec<Vec<EdgeId>>,
}

#[derive(PartialEq)]
struct HeapItem(f64, usize);

impl Eq for HeapItem {}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on distance
        other
            .0
            .total_cmp(&self.0)
            .then_with(|| other.1.cmp(&self.1))
    }
}

impl MetricGraph {
    pub fn build(spec: GraphBuilder) -> Result<Self> {
        if spec.vertices.is_empty() {
            return Err(Error::NoVertices);
        }
        let mut index = HashMap::with_capacity(spec.vertices.len());
        for (i, name) in spec.vertices.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }

        let n = spec.vertices.len();
        let mut edges = Vec::with_capacity(spec.edges.len());
        let mut seen_edges = HashMap::with_capacity(spec.edges.len());
        let mut degree = vec![0usize; n];
        let mut incident = vec![Vec::new(); n];
        for (name, u, v, length) in spec.edges {
            if seen_edges.insert(name.clone(), ()).is_some() {
                return Err(Error::DuplicateEdge(name));
            }
            if !(length > 0.0) || !length.is_finite() {
                return Err(Error::NonPositiveEdgeLength { edge: name, length });
            }
            let lookup = |vertex: &String| {
                index
                    .get(vertex)
                    .copied()
                    .ok_or_else(|| Error::UnknownEndpoint {
                        edge: name.clone(),
                        vertex: vertex.clone(),
                    })
            };
            let (ui, vi) = (lookup(&u)?, lookup(&v)?);
            let id = EdgeId(edges.len());
            degree[ui] += 1;
            degree[vi] += 1;
            incident[ui].push(id);
            if ui != vi {
                incident[vi].push(id);
            }
            edges.push(Edge {
                name,
                u: VertexId(ui),
                v: VertexId(vi),
                length,
            });
        }

        // Self-loops never shorten a vertex-to-vertex path, so they are skipped.
        let mut adjacency = vec![Vec::new(); n];
        for e in edges.iter().filter(|e| !e.is_self_loop()) {
            adjacency[e.u.0].push((e.v.0, e.length));
            adjacency[e.v.0].push((e.u.0, e.length));
        }

        let mut dist = vec![f64::INFINITY; n * n];
        for source in 0..n {
            let row = &mut dist[source * n..(source + 1) * n];
            row[source] = 0.0;
            let mut heap = BinaryHeap::new();
            heap.push(HeapItem(0.0, source));
            while let Some(HeapItem(d, at)) = heap.pop() {
                if d > row[at] {
                    continue;
                }
                for &(next, w) in &adjacency[at] {
                    let nd = d + w;
                    if nd < row[next] {
                        row[next] = nd;
                        heap.push(HeapItem(nd, next));
                    }
                }
            }
            if let Some(unreachable) = row.iter().position(|d| d.is_infinite()) {
                return Err(Error::DisconnectedGraph(
                    spec.vertices[unreachable].clone(),
                    spec.vertices[source].clone(),
                ));
            }
        }
        // Dijkstra from both sides can differ in the last bit; keep the matrix exactly symmetric.
        for i in 0..n {
            for j in (i + 1)..n {
                let d = dist[i * n + j].min(dist[j * n + i]);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }

        Ok(Self {
            vertex_names: spec.vertices,
            edges,
            dist,
            degree,
            incident,
        })
    }

    /// A single edge `[0, length]` between two leaves `a` and `b`.
    pub fn segment(length: f64) -> Result<Self> {
        GraphBuilder::new()
            .vertices(["a", "b"])
            .edge("e0", "a", "b", length)
            .build()
    }

    /// One vertex carrying one self-loop of the given circumference.
    pub fn circle(circumference: f64) -> Result<Self> {
        GraphBuilder::new()
            .vertex("v")
            .edge("loop", "v", "v", circumference)
            .build()
    }

    /// Star with center `c`, tips `t1..tk` and rays `r1..rk` (ray `ri` goes from `c` to `ti`).
    pub fn star(ray_lengths: &[f64]) -> Result<Self> {
        let mut builder = GraphBuilder::new().vertex("c");
        for (i, &len) in ray_lengths.iter().enumerate() {
            let tip = format!("t{}", i + 1);
            builder = builder
                .vertex(tip.clone())
                .edge(format!("r{}", i + 1), "c", tip, len);
        }
        builder.build()
    }

    /// Same combinatorics with every edge length multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let mut builder = GraphBuilder::new().vertices(self.vertex_names.iter().cloned());
        for e in &self.edges {
            builder = builder.edge(
                e.name.clone(),
                self.vertex_names[e.u.0].clone(),
                self.vertex_names[e.v.0].clone(),
                e.length * factor,
            );
        }
        builder.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names
            .iter()
            .position(|n| n == name)
            .map(VertexId)
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.name == name).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len()).map(VertexId)
    }

    /// Number of edge ends at `v`; a self-loop counts twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.degree[v.0]
    }

    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.0]
    }

    pub fn vertex_distance(&self, a: VertexId, b: VertexId) -> f64 {
        self.dist[a.0 * self.vertex_count() + b.0]
    }

    pub fn total_length(&self) -> f64 {
        self.edges.iter().map(|e| e.length).sum()
    }

    /// `true` when the graph is one vertex with one self-loop and nothing else.
    pub fn is_circle(&self) -> bool {
        self.vertex_count() == 1 && self.edge_count() == 1 && self.edges[0].is_self_loop()
    }

    /// `true` when the graph has no simple loop. For a connected graph this
    /// is exactly `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count()
    }

    /// Single edge joining two distinct leaves.
    pub fn is_segment(&self) -> bool {
        self.vertex_count() == 2 && self.edge_count() == 1 && !self.edges[0].is_self_loop()
    }

    /// Leaves: vertices of degree exactly one.
    pub fn boundary(&self) -> Vec<VertexId> {
        self.vertex_ids().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Length of the shortest edge whose endpoints both have degree > 1,
    /// or `None` when no edge qualifies.
    pub fn smallest_nonterminal_edge(&self) -> Option<f64> {
        self.edges
            .iter()
            .filter(|e| self.degree(e.u).min(self.degree(e.v)) > 1)
            .map(|e| e.length)
            .reduce(f64::min)
    }

    pub fn point_distance(&self, p: &GraphPoint, q: &GraphPoint) -> Result<f64> {
        self.check_point(p)?;
        self.check_point(q)?;
        Ok(self.dist_unchecked(p, q))
    }

    /// Minimum distance from `p` to a point of `set`.
    pub fn distance_to_set(&self, p: &GraphPoint, set: &PointSet) -> Result<f64> {
        self.check_point(p)?;
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.distance_to_points(p, set.points()))
    }

    pub fn set_diameter(&self, set: &PointSet) -> Result<f64> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let pts = set.points();
        let mut best = 0.0f64;
        for (i, p) in pts.iter().enumerate() {
            for q in &pts[i + 1..] {
                best = best.max(self.dist_unchecked(p, q));
            }
        }
        Ok(best)
    }

    /// Exact supremum of distances over the whole continuum.
    pub fn graph_diameter(&self) -> f64 {
        self.graph_diameter_with(Execution::default())
    }

    pub fn graph_diameter_with(&self, exec: Execution) -> f64 {
        let m = self.edge_count();
        if m == 0 {
            return 0.0;
        }
        let rows = exec.map_range(m, |i| {
            let e = EdgeId(i);
            let full_e = (0.0, self.edge(e).length);
            (i..m)
                .map(|j| {
                    let f = EdgeId(j);
                    self.segment_distance_range(e, full_e, f, (0.0, self.edge(f).length))
                        .max
                })
                .fold(0.0, f64::max)
        });
        rows.into_iter().fold(0.0, f64::max)
    }

    /// Closed-form geodesic distance between two valid points.
    pub(crate) fn dist_unchecked(&self, p: &GraphPoint, q: &GraphPoint) -> f64 {
        if let (
            GraphPoint::Edge {
                edge: e1,
                offset: s,
            },
            GraphPoint::Edge {
                edge: e2,
                offset: t,
            },
        ) = (p, q)
        {
            if e1 == e2 {
                let direct = (s - t).abs();
                let around = self.anchored_distance(p, q);
                return direct.min(around);
            }
        }
        self.anchored_distance(p, q)
    }

    fn anchored_distance(&self, p: &GraphPoint, q: &GraphPoint) -> f64 {
        let n = self.vertex_count();
        let mut best = f64::INFINITY;
        for (a, da) in self.anchors(p) {
            let row = &self.dist[a.0 * n..(a.0 + 1) * n];
            for (b, db) in self.anchors(q) {
                best = best.min(da + row[b.0] + db);
            }
        }
        best
    }

    /// Ways of leaving a point: (endpoint, distance along the edge).
    pub(crate) fn anchors(&self, p: &GraphPoint) -> [(VertexId, f64); 2] {
        match *p {
            GraphPoint::Vertex(v) => [(v, 0.0), (v, 0.0)],
            GraphPoint::Edge { edge, offset } => {
                let e = &self.edges[edge.0];
                [(e.u, offset), (e.v, e.length - offset)]
            }
        }
    }

    pub(crate) fn distance_to_points(&self, p: &GraphPoint, points: &[GraphPoint]) -> f64 {
        points
            .iter()
            .map(|q| self.dist_unchecked(p, q))
            .fold(f64::INFINITY, f64::min)
    }

    /// Distance from vertex `v` to the nearest point of `points`.
    pub(crate) fn vertex_to_points(&self, v: VertexId, points: &[GraphPoint]) -> f64 {
        self.distance_to_points(&GraphPoint::Vertex(v), points)
    }

    pub fn check_point(&self, p: &GraphPoint) -> Result<()> {
        match *p {
            GraphPoint::Vertex(v) if v.0 < self.vertex_count() => Ok(()),
            GraphPoint::Vertex(v) => Err(Error::PointNotOnGraph(format!("vertex #{}", v.0))),
            GraphPoint::Edge { edge, offset } => {
                let Some(e) = self.edges.get(edge.0) else {
                    return Err(Error::PointNotOnGraph(format!("edge #{}", edge.0)));
                };
                if offset > 0.0 && offset < e.length {
                    Ok(())
                } else {
                    Err(Error::PointNotOnGraph(format!(
                        "offset {offset} not interior to edge `{}` of length {}",
                        e.name, e.length
                    )))
                }
            }
        }
    }
}
