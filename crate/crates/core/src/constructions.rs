//! Generators for the extremal examples and for dense samples, plus exact
//! distortion of correspondences built from arcs or edge cells.
//!
//! Every generator re-measures what it promises and fails with
//! [`Error::ConstructionVerificationFailed`] instead of returning an
//! instance that does not have the advertised distances.

use std::f64::consts::PI;

use crate::gh_oracle::{restrict_metric, FiniteMetricSpace};
use crate::hausdorff::{hausdorff_graph_to_region, hausdorff_graph_to_set};
use crate::metric_graph::{EdgeId, EdgeIntervalSet, GraphPoint, MetricGraph, PointSet, VertexId};
use crate::{Error, Result, TAU};

const VERIFY_TOL: f64 = 1e-9;

fn verify(what: &str, got: f64, want: f64) -> Result<()> {
    if (got - want).abs() > VERIFY_TOL {
        return Err(Error::ConstructionVerificationFailed(format!(
            "{what}: measured {got}, expected {want}"
        )));
    }
    Ok(())
}

/// Star tree with a truncated copy far from it in Hausdorff distance and
/// an isometric, uniformly shortened copy close to it.
#[derive(Debug, Clone)]
pub struct StarCounterexample {
    pub n: usize,
    /// Rays of lengths `1 + t/n` for `t = 1..=n`.
    pub tree: MetricGraph,
    /// The longest ray cut back to length 1.
    pub truncated: EdgeIntervalSet,
    /// Every ray shortened by `1/n`.
    pub centered: EdgeIntervalSet,
    pub hausdorff_truncated: f64,
    pub hausdorff_centered: f64,
}

pub fn star_counterexample(n: usize) -> Result<StarCounterexample> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "star needs n >= 2 rays, got {n}"
        )));
    }
    let nf = n as f64;
    let lengths: Vec<f64> = (1..=n).map(|t| (nf + t as f64) / nf).collect();
    let tree = MetricGraph::star(&lengths)?;

    let mut truncated = EdgeIntervalSet::empty(&tree);
    let mut centered = EdgeIntervalSet::empty(&tree);
    for (i, &len) in lengths.iter().enumerate() {
        let keep = if i + 1 == n { 1.0 } else { len };
        truncated.insert_closed(&tree, EdgeId(i), 0.0, keep)?;
        centered.insert_closed(&tree, EdgeId(i), 0.0, len - 1.0 / nf)?;
    }

    let hausdorff_truncated = hausdorff_graph_to_region(&tree, &truncated)?;
    let hausdorff_centered = hausdorff_graph_to_region(&tree, &centered)?;
    verify("d_H(T, X)", hausdorff_truncated, 1.0)?;
    verify("d_H(T, X')", hausdorff_centered, 1.0 / nf)?;
    Ok(StarCounterexample {
        n,
        tree,
        truncated,
        centered,
        hausdorff_truncated,
        hausdorff_centered,
    })
}

impl StarCounterexample {
    /// Samples a wedge region at spacing `delta`: the center plus, on each
    /// ray, the points `delta, 2·delta, …` up to the ray's end. Rays are
    /// emitted shortest first, so equal length multisets give matching
    /// orders.
    pub fn sample_region(&self, region: &EdgeIntervalSet, delta: f64) -> Result<PointSet> {
        if !(delta > 0.0) {
            return Err(Error::NonPositiveEpsilon(delta));
        }
        let mut rays: Vec<(f64, EdgeId)> = Vec::new();
        for e in self.tree.edge_ids() {
            match region.intervals(e) {
                [] => {}
                [(lo, hi)] if *lo == 0.0 => rays.push((*hi, e)),
                _ => {
                    return Err(Error::InvalidParameter(
                        "region is not a wedge of rays from the center".into(),
                    ))
                }
            }
        }
        rays.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut points = vec![GraphPoint::Vertex(VertexId(0))];
        for (len, e) in rays {
            let steps = (len / delta).round();
            if (steps * delta - len).abs() > TAU {
                return Err(Error::InvalidParameter(format!(
                    "ray length {len} is not a multiple of spacing {delta}"
                )));
            }
            for i in 1..=steps as usize {
                let t = if i == steps as usize {
                    len
                } else {
                    i as f64 * delta
                };
                points.push(GraphPoint::on_edge(&self.tree, e, t)?);
            }
        }
        PointSet::new(&self.tree, points)
    }

    /// Distance matrices of matched `delta`-nets of the truncated and the
    /// centered copy.
    pub fn sample_nets(&self, delta: f64) -> Result<(FiniteMetricSpace, FiniteMetricSpace)> {
        let a = self.sample_region(&self.truncated, delta)?;
        let b = self.sample_region(&self.centered, delta)?;
        Ok((
            restrict_metric(&self.tree, &a)?,
            restrict_metric(&self.tree, &b)?,
        ))
    }
}

/// Closed arcs of a circle, each paired with a sample point index.
///
/// Arc coordinates are arc length from the circle's vertex; `hi` may exceed
/// the circumference for an arc that wraps past the vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcCorrespondence {
    pub assignments: Vec<((f64, f64), usize)>,
}

impl ArcCorrespondence {
    /// Checks that the arcs cover the circle and that every sample index
    /// in `0..n_points` receives an arc.
    pub fn validate(&self, circumference: f64, n_points: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::NotACorrespondence(msg));
        let mut hit = vec![false; n_points];
        let mut pieces = Vec::new();
        for &((lo, hi), idx) in &self.assignments {
            if idx >= n_points {
                return bad(format!("arc assigned to missing point {idx}"));
            }
            if !(lo <= hi && hi - lo <= circumference) {
                return bad(format!("malformed arc [{lo}, {hi}]"));
            }
            hit[idx] = true;
            let start = lo.rem_euclid(circumference);
            let end = start + (hi - lo);
            if end > circumference {
                pieces.push((start, circumference));
                pieces.push((0.0, end - circumference));
            } else {
                pieces.push((start, end));
            }
        }
        if let Some(i) = hit.iter().position(|&h| !h) {
            return bad(format!("point {i} receives no arc"));
        }
        pieces.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut reach = 0.0f64;
        for (lo, hi) in pieces {
            if lo > reach + TAU {
                return bad(format!("arcs leave ({reach}, {lo}) uncovered"));
            }
            reach = reach.max(hi);
        }
        if reach < circumference - TAU {
            return bad(format!("arcs leave ({reach}, {circumference}) uncovered"));
        }
        Ok(())
    }
}

fn circle_length(graph: &MetricGraph) -> Result<f64> {
    if !graph.is_circle() {
        return Err(Error::NotACircle);
    }
    Ok(graph.edge(EdgeId(0)).length)
}

fn circle_coordinate(p: &GraphPoint) -> f64 {
    match *p {
        GraphPoint::Vertex(_) => 0.0,
        GraphPoint::Edge { offset, .. } => offset,
    }
}

/// Distance on a circle of circumference `l` as a function of the signed
/// difference `delta`; returns its min and max for `delta` in `[lo, hi]`.
fn circle_gap_range(l: f64, lo: f64, hi: f64) -> (f64, f64) {
    let f = |d: f64| {
        let r = d.rem_euclid(l);
        r.min(l - r)
    };
    let contains_shift = |c: f64| (hi - c) / l >= ((lo - c) / l).ceil();
    let min = if contains_shift(0.0) {
        0.0
    } else {
        f(lo).min(f(hi))
    };
    let max = if contains_shift(l / 2.0) {
        l / 2.0
    } else {
        f(lo).max(f(hi))
    };
    (min, max)
}

/// Exact `dis(R)` for an arc correspondence between a circle and a sample.
pub fn arc_correspondence_distortion(
    circle: &MetricGraph,
    r: &ArcCorrespondence,
    x: &PointSet,
) -> Result<f64> {
    let l = circle_length(circle)?;
    r.validate(l, x.len())?;
    let coords: Vec<f64> = x.points().iter().map(circle_coordinate).collect();
    let mut worst = 0.0f64;
    for &((lo, hi), i) in &r.assignments {
        for &((lo2, hi2), j) in &r.assignments {
            let (min, max) = circle_gap_range(l, lo2 - hi, hi2 - lo);
            let (_, dx) = circle_gap_range(l, coords[j] - coords[i], coords[j] - coords[i]);
            worst = worst.max(max - dx).max(dx - min);
        }
    }
    Ok(worst)
}

/// Six-point sample of the circle of length `2π` whose Hausdorff distance
/// `π/3 + ε` overstates its Gromov–Hausdorff distance `π/3`.
#[derive(Debug, Clone)]
pub struct SixPointCircle {
    pub epsilon: f64,
    pub circle: MetricGraph,
    /// Points in cyclic order `d, f, c, e, a, b`.
    pub points: PointSet,
    pub labels: [char; 6],
    pub correspondence: ArcCorrespondence,
    pub hausdorff: f64,
    pub distortion: f64,
}

/// The instance with the `c → e` gap at `π/3`. That value is forced: the
/// pairs `(c, e)` and `(e, b)` each push the distortion above `2π/3` as
/// soon as the gap moves in one direction.
pub fn circle_six_point(epsilon: f64) -> Result<SixPointCircle> {
    circle_six_point_with_split(epsilon, PI / 3.0)
}

/// Gaps `d→f = f→c = π/3`, `c→e = g1`, `e→a = π/2 − ε − g1`,
/// `a→b = 2π/3 + 2ε`, `b→d = π/6 − ε`.
pub fn circle_six_point_with_split(epsilon: f64, g1: f64) -> Result<SixPointCircle> {
    let hi = PI / 6.0;
    if !(epsilon > 0.0 && epsilon < hi) {
        return Err(Error::EpsilonOutOfRange {
            value: epsilon,
            lo: 0.0,
            hi,
        });
    }
    let g2 = PI / 2.0 - epsilon - g1;
    if !(g1 > 0.0 && g2 > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "gap split {g1} leaves no room for e"
        )));
    }
    let circle = MetricGraph::circle(2.0 * PI)?;
    let gaps = [PI / 3.0, PI / 3.0, g1, g2, 2.0 * PI / 3.0 + 2.0 * epsilon];
    let mut offsets = vec![0.0];
    for g in gaps {
        offsets.push(offsets.last().unwrap() + g);
    }
    let points = PointSet::from_offsets(&circle, EdgeId(0), &offsets)?;
    let labels = ['d', 'f', 'c', 'e', 'a', 'b'];
    let index = |c: char| labels.iter().position(|&l| l == c).unwrap();

    let short = PI / 6.0 + epsilon;
    let long = 2.0 * PI / 3.0 - 2.0 * epsilon;
    let arcs = [
        ('d', short),
        ('c', short),
        ('a', long),
        ('e', short),
        ('f', short),
        ('b', long),
    ];
    let mut start = 0.0;
    let mut assignments = Vec::new();
    for (label, len) in arcs {
        assignments.push(((start, start + len), index(label)));
        start += len;
    }
    let correspondence = ArcCorrespondence { assignments };

    let hausdorff = hausdorff_graph_to_set(&circle, &points)?;
    let distortion = arc_correspondence_distortion(&circle, &correspondence, &points)?;
    verify("d_H(S, X)", hausdorff, PI / 3.0 + epsilon)?;
    verify("dis(R)", distortion, 2.0 * PI / 3.0)?;
    Ok(SixPointCircle {
        epsilon,
        circle,
        points,
        labels,
        correspondence,
        hausdorff,
        distortion,
    })
}

/// Evenly spaced points on every edge, endpoints included, at spacing at
/// most `2ε`; the result is within Hausdorff distance `ε` of the graph.
pub fn epsilon_net(graph: &MetricGraph, epsilon: f64) -> Result<PointSet> {
    if !(epsilon > 0.0) {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    let mut points: Vec<GraphPoint> = graph.vertex_ids().map(GraphPoint::Vertex).collect();
    for e in graph.edge_ids() {
        let len = graph.edge(e).length;
        let k = ((len / (2.0 * epsilon)) - 1e-12).ceil().max(1.0) as usize;
        for i in 1..k {
            points.push(GraphPoint::on_edge(graph, e, len * i as f64 / k as f64)?);
        }
    }
    let net = PointSet::new(graph, points)?;
    let h = hausdorff_graph_to_set(graph, &net)?;
    if h > epsilon + TAU {
        return Err(Error::ConstructionVerificationFailed(format!(
            "net has d_H = {h} > {epsilon}"
        )));
    }
    Ok(net)
}

/// `a, a + h, a + 2h, …` with the last point clamped to `b`.
pub fn grid_interval(a: f64, b: f64, h: f64) -> Result<Vec<f64>> {
    if !(a < b) {
        return Err(Error::InvalidParameter(format!(
            "interval [{a}, {b}] is empty"
        )));
    }
    if !(h > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "grid step {h} must be positive"
        )));
    }
    let k = ((b - a) / h - 1e-9).ceil().max(1.0) as usize;
    let mut out: Vec<f64> = (0..k).map(|i| a + i as f64 * h).collect();
    out.push(b);
    Ok(out)
}

/// [`grid_interval`] over the whole of a segment graph.
pub fn grid_on_segment(segment: &MetricGraph, h: f64) -> Result<PointSet> {
    if !segment.is_segment() {
        return Err(Error::InvalidParameter(
            "graph is not a single segment".into(),
        ));
    }
    let len = segment.edge(EdgeId(0)).length;
    PointSet::from_offsets(segment, EdgeId(0), &grid_interval(0.0, len, h)?)
}

/// A correspondence between a graph and a finite sample, given as closed
/// edge pieces `[lo, hi]` (possibly degenerate) each sent to one sample
/// index.
#[derive(Debug, Clone, PartialEq)]
pub struct CellCorrespondence {
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub edge: EdgeId,
    pub lo: f64,
    pub hi: f64,
    pub target: usize,
}

impl CellCorrespondence {
    /// Sends each sample point to itself and every cell between two
    /// consecutive sample points on an edge to one of them, split at
    /// `cut(edge, lo, hi)`: the part below the cut goes to the left sample
    /// point, the rest to the right one.
    pub fn nearest_split(
        graph: &MetricGraph,
        x: &PointSet,
        mut cut: impl FnMut(EdgeId, f64, f64) -> f64,
    ) -> Result<Self> {
        let index_of = |p: &GraphPoint| x.points().iter().position(|q| q == p);
        let mut cells = Vec::new();
        for e in graph.edge_ids() {
            let edge = graph.edge(e);
            let mut stops: Vec<(f64, usize)> = Vec::new();
            for (i, p) in x.points().iter().enumerate() {
                match *p {
                    GraphPoint::Edge { edge: pe, offset } if pe == e => stops.push((offset, i)),
                    _ => {}
                }
            }
            let end_index = |v: VertexId| {
                index_of(&GraphPoint::Vertex(v)).ok_or_else(|| {
                    Error::InvalidParameter("sample must contain every vertex".into())
                })
            };
            stops.push((0.0, end_index(edge.u)?));
            stops.push((edge.length, end_index(edge.v)?));
            stops.sort_by(|a, b| a.0.total_cmp(&b.0));
            for w in stops.windows(2) {
                let ((lo, left), (hi, right)) = (w[0], w[1]);
                cells.push(Cell {
                    edge: e,
                    lo,
                    hi: lo,
                    target: left,
                });
                let c = cut(e, lo, hi).clamp(lo, hi);
                if c > lo {
                    cells.push(Cell {
                        edge: e,
                        lo,
                        hi: c,
                        target: left,
                    });
                }
                if c < hi {
                    cells.push(Cell {
                        edge: e,
                        lo: c,
                        hi,
                        target: right,
                    });
                }
            }
            let (last, idx) = *stops.last().unwrap();
            cells.push(Cell {
                edge: e,
                lo: last,
                hi: last,
                target: idx,
            });
        }
        Ok(Self { cells })
    }

    /// Exact `dis(R)`: for each pair of cells, the extremes of the graph
    /// distance between them against the distance of their targets.
    pub fn distortion(&self, graph: &MetricGraph, x: &PointSet) -> Result<f64> {
        let dx = restrict_metric(graph, x)?;
        let mut worst = 0.0f64;
        for a in &self.cells {
            for b in &self.cells {
                let range =
                    graph.segment_distance_range(a.edge, (a.lo, a.hi), b.edge, (b.lo, b.hi));
                let d = dx.get(a.target, b.target);
                worst = worst.max(range.max - d).max(d - range.min);
            }
        }
        Ok(worst)
    }

    /// `R[S]` for `S` the union of the closed edges in `edges` and the
    /// vertices in `vertices`.
    pub fn image(
        &self,
        graph: &MetricGraph,
        edges: &[EdgeId],
        vertices: &[VertexId],
        x: &PointSet,
    ) -> Result<PointSet> {
        let mut hit = vec![false; x.len()];
        for c in &self.cells {
            let e = graph.edge(c.edge);
            let touches = edges.contains(&c.edge)
                || (c.lo == 0.0 && vertices.contains(&e.u))
                || (c.hi == e.length && vertices.contains(&e.v));
            if touches {
                hit[c.target] = true;
            }
        }
        PointSet::new(
            graph,
            x.points()
                .iter()
                .zip(&hit)
                .filter(|(_, &h)| h)
                .map(|(p, _)| *p),
        )
    }
}
