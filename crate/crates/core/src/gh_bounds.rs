//! Certified Gromov–Hausdorff lower bounds and exact values.
//!
//! Each function measures the quantities its theorem needs, checks the
//! hypotheses with margin τ, and returns a [`BoundCertificate`]. A failed
//! hypothesis is not an error: the certificate comes back
//! [`BoundKind::Inapplicable`] with value 0, which is always a valid lower
//! bound, and the failed check recorded.
//!
//! The pair bounds take their slack as `ε = d_H(G, Y)`, the smallest value
//! the theorems admit; the bounds only weaken as `ε` grows.

use std::fmt;

use crate::gh_oracle::FiniteMetricSpace;
use crate::hausdorff::{directed_hausdorff_boundary, hausdorff_graph_to_set, hausdorff_sets};
use crate::metric_graph::{EdgeId, GraphPoint, MetricGraph, PointSet};
use crate::{Error, Result, TAU};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    TreeEquality,
    IntervalCorollary,
    CircleBound,
    GraphBound,
    TreePairBound,
    CirclePairBound,
    GraphPairBound,
    DiameterBound,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::TreeEquality => "tree_equality",
            Theorem::IntervalCorollary => "interval_gh_exact",
            Theorem::CircleBound => "circle_bound",
            Theorem::GraphBound => "graph_bound",
            Theorem::TreePairBound => "tree_pair_bound",
            Theorem::CirclePairBound => "circle_pair_bound",
            Theorem::GraphPairBound => "graph_pair_bound",
            Theorem::DiameterBound => "diameter_bound",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    LowerBound,
    ExactValue,
    Inapplicable,
}

impl BoundKind {
    pub fn tag(self) -> &'static str {
        match self {
            BoundKind::LowerBound => "lower-bound",
            BoundKind::ExactValue => "exact-value",
            BoundKind::Inapplicable => "inapplicable",
        }
    }
}

/// Which distance a certificate is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// `d_GH(G, X)`.
    GraphToSubset,
    /// `d_GH(X, Y)`.
    SubsetPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Strictly greater, with margin τ.
    Greater,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Greater => ">",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis {
    pub description: String,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    pub satisfied: bool,
}

impl Hypothesis {
    fn greater(description: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self {
            description: description.into(),
            lhs,
            relation: Relation::Greater,
            rhs,
            satisfied: lhs > rhs + TAU,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCertificate {
    pub value: f64,
    pub kind: BoundKind,
    pub theorem: Theorem,
    pub target: Target,
    pub hypotheses: Vec<Hypothesis>,
    /// Hausdorff distance of the co-embedded pair, which caps `d_GH`.
    pub upper_bound: Option<f64>,
}

impl BoundCertificate {
    fn new(theorem: Theorem, target: Target, upper_bound: Option<f64>) -> Self {
        Self {
            value: 0.0,
            kind: BoundKind::Inapplicable,
            theorem,
            target,
            hypotheses: Vec::new(),
            upper_bound,
        }
    }

    fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.satisfied)
    }

    /// Sets the value if every recorded hypothesis holds; otherwise the
    /// certificate stays inapplicable with value 0.
    fn conclude(mut self, value: f64, kind: BoundKind) -> Self {
        if self.hypotheses_hold() {
            self.value = value;
            self.kind = kind;
        }
        self
    }

    pub fn is_applicable(&self) -> bool {
        self.kind != BoundKind::Inapplicable
    }
}

/// `½ |diam X − diam Y|`, valid for any pair of compact spaces.
pub fn diameter_bound(diam_x: f64, diam_y: f64) -> BoundCertificate {
    BoundCertificate::new(Theorem::DiameterBound, Target::SubsetPair, None)
        .conclude(0.5 * (diam_x - diam_y).abs(), BoundKind::LowerBound)
}

pub fn diameter_bound_spaces(dx: &FiniteMetricSpace, dy: &FiniteMetricSpace) -> BoundCertificate {
    diameter_bound(dx.diameter(), dy.diameter())
}

fn require_nonempty(sets: &[&PointSet]) -> Result<()> {
    if sets.iter().any(|s| s.is_empty()) {
        return Err(Error::EmptySet);
    }
    Ok(())
}

/// On a metric tree, `d_GH(T, X) = d_H(T, X)` once the largest gap is not at a leaf.
pub fn tree_equality(tree: &MetricGraph, x: &PointSet) -> Result<BoundCertificate> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    require_nonempty(&[x])?;
    let h = hausdorff_graph_to_set(tree, x)?;
    let b = directed_hausdorff_boundary(tree, x)?;
    let mut cert = BoundCertificate::new(Theorem::TreeEquality, Target::GraphToSubset, Some(h));
    cert.hypotheses
        .push(Hypothesis::greater("d_H(T,X) > d_H(leaves -> X)", h, b));
    Ok(cert.conclude(h, BoundKind::ExactValue))
}

/// On a metric tree, `d_GH(X, Y) >= d_H(X, Y) − 2ε` with `ε = d_H(T, Y)`.
pub fn tree_pair_bound(tree: &MetricGraph, x: &PointSet, y: &PointSet) -> Result<BoundCertificate> {
    require_nonempty(&[x, y])?;
    tree_pair_bound_with_slack(tree, x, y, hausdorff_graph_to_set(tree, y)?)
}

/// [`tree_pair_bound`] with a caller-chosen slack `ε >= d_H(T, Y)`.
pub fn tree_pair_bound_with_slack(
    tree: &MetricGraph,
    x: &PointSet,
    y: &PointSet,
    eps: f64,
) -> Result<BoundCertificate> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    check_slack(tree, x, y, eps)?;
    let dxy = hausdorff_sets(tree, x, y)?;
    let b = directed_hausdorff_boundary(tree, x)?;
    let value = dxy - 2.0 * eps;
    let mut cert = BoundCertificate::new(Theorem::TreePairBound, Target::SubsetPair, Some(dxy));
    cert.hypotheses.push(Hypothesis::greater(
        "d_H(X,Y) > d_H(leaves -> X) + eps",
        dxy,
        b + eps,
    ));
    cert.hypotheses
        .push(Hypothesis::greater("bound is positive", value, 0.0));
    Ok(cert.conclude(value, BoundKind::LowerBound))
}

/// The pair theorems need `ε >= d_H(G, Y)`.
fn check_slack(graph: &MetricGraph, x: &PointSet, y: &PointSet, eps: f64) -> Result<()> {
    require_nonempty(&[x, y])?;
    let needed = hausdorff_graph_to_set(graph, y)?;
    if !(eps >= needed - TAU) {
        return Err(Error::InvalidParameter(format!(
            "slack {eps} is below d_H(G, Y) = {needed}"
        )));
    }
    Ok(())
}

fn circle_length(graph: &MetricGraph) -> Result<f64> {
    if !graph.is_circle() {
        return Err(Error::NotACircle);
    }
    Ok(graph.edge(EdgeId(0)).length)
}

/// On a circle of circumference `L`, `d_GH(S, X) >= min{d_H(S, X), L/6}`.
pub fn circle_bound(circle: &MetricGraph, x: &PointSet) -> Result<BoundCertificate> {
    let l = circle_length(circle)?;
    require_nonempty(&[x])?;
    let h = hausdorff_graph_to_set(circle, x)?;
    let cap = l / 6.0;
    let cert = BoundCertificate::new(Theorem::CircleBound, Target::GraphToSubset, Some(h));
    Ok(if h <= cap {
        cert.conclude(h, BoundKind::ExactValue)
    } else {
        cert.conclude(cap, BoundKind::LowerBound)
    })
}

/// On a circle, `d_GH(X, Y) >= min{d_H(X, Y) − 2ε, L/6 − ε}` with `ε = d_H(S, Y)`.
pub fn circle_pair_bound(
    circle: &MetricGraph,
    x: &PointSet,
    y: &PointSet,
) -> Result<BoundCertificate> {
    require_nonempty(&[x, y])?;
    circle_pair_bound_with_slack(circle, x, y, hausdorff_graph_to_set(circle, y)?)
}

/// [`circle_pair_bound`] with a caller-chosen slack `ε >= d_H(S, Y)`.
pub fn circle_pair_bound_with_slack(
    circle: &MetricGraph,
    x: &PointSet,
    y: &PointSet,
    eps: f64,
) -> Result<BoundCertificate> {
    let l = circle_length(circle)?;
    check_slack(circle, x, y, eps)?;
    let dxy = hausdorff_sets(circle, x, y)?;
    let value = (dxy - 2.0 * eps).min(l / 6.0 - eps);
    let mut cert = BoundCertificate::new(Theorem::CirclePairBound, Target::SubsetPair, Some(dxy));
    cert.hypotheses
        .push(Hypothesis::greater("bound is positive", value, 0.0));
    Ok(cert.conclude(value, BoundKind::LowerBound))
}

/// The leaf hypothesis, only when the graph has leaves.
fn boundary_hypothesis(graph: &MetricGraph, x: &PointSet, h: f64) -> Result<Option<Hypothesis>> {
    if graph.boundary().is_empty() {
        return Ok(None);
    }
    let b = directed_hausdorff_boundary(graph, x)?;
    Ok(Some(Hypothesis::greater(
        "d_H(G,X) > d_H(leaves -> X)",
        h,
        b,
    )))
}

/// `d_GH(G, X) >= min{d_H(G, X), e(G)/12}` on a graph with loops. Trees
/// are handed to [`tree_equality`], since `e(G)` is undefined there.
pub fn graph_bound(graph: &MetricGraph, x: &PointSet) -> Result<BoundCertificate> {
    require_nonempty(&[x])?;
    let Some(e) = graph
        .smallest_nonterminal_edge()
        .filter(|_| !graph.is_tree())
    else {
        return tree_equality(graph, x);
    };
    let h = hausdorff_graph_to_set(graph, x)?;
    let cap = e / 12.0;
    let mut cert = BoundCertificate::new(Theorem::GraphBound, Target::GraphToSubset, Some(h));
    cert.hypotheses.extend(boundary_hypothesis(graph, x, h)?);
    Ok(if h <= cap {
        cert.conclude(h, BoundKind::ExactValue)
    } else {
        cert.conclude(cap, BoundKind::LowerBound)
    })
}

/// `d_GH(X, Y) >= min{d_H(X, Y) − 2ε, e(G)/12 − ε}` with `ε = d_H(G, Y)`;
/// trees go to [`tree_pair_bound`].
pub fn graph_pair_bound(
    graph: &MetricGraph,
    x: &PointSet,
    y: &PointSet,
) -> Result<BoundCertificate> {
    require_nonempty(&[x, y])?;
    graph_pair_bound_with_slack(graph, x, y, hausdorff_graph_to_set(graph, y)?)
}

/// [`graph_pair_bound`] with a caller-chosen slack `ε >= d_H(G, Y)`.
pub fn graph_pair_bound_with_slack(
    graph: &MetricGraph,
    x: &PointSet,
    y: &PointSet,
    eps: f64,
) -> Result<BoundCertificate> {
    let Some(e) = graph
        .smallest_nonterminal_edge()
        .filter(|_| !graph.is_tree())
    else {
        return tree_pair_bound_with_slack(graph, x, y, eps);
    };
    check_slack(graph, x, y, eps)?;
    let h = hausdorff_graph_to_set(graph, x)?;
    let dxy = hausdorff_sets(graph, x, y)?;
    let value = (dxy - 2.0 * eps).min(e / 12.0 - eps);
    let mut cert = BoundCertificate::new(Theorem::GraphPairBound, Target::SubsetPair, Some(dxy));
    cert.hypotheses.extend(boundary_hypothesis(graph, x, h)?);
    cert.hypotheses
        .push(Hypothesis::greater("bound is positive", value, 0.0));
    Ok(cert.conclude(value, BoundKind::LowerBound))
}

/// Closed form for `d_GH([a, b], X)` with `X ⊆ [a, b]` finite: with
/// `c = min X`, `d = max X`, the larger of the centered margin
/// `(c − a + b − d)/2` and `d_H([c, d], X)`.
pub fn interval_gh_exact(a: f64, b: f64, xs: &[f64]) -> Result<f64> {
    if !(a < b) {
        return Err(Error::InvalidParameter(format!(
            "interval [{a}, {b}] is empty"
        )));
    }
    if xs.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&p) = xs.iter().find(|&&p| !(a..=b).contains(&p)) {
        return Err(Error::PointOutsideInterval {
            point: p,
            lo: a,
            hi: b,
        });
    }
    let c = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let d = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let margin = 0.5 * (c - a + b - d);
    let inner = if d > c {
        let sub = MetricGraph::segment(d - c)?;
        let offsets: Vec<f64> = xs.iter().map(|&p| p - c).collect();
        hausdorff_graph_to_set(&sub, &PointSet::from_offsets(&sub, EdgeId(0), &offsets)?)?
    } else {
        0.0
    };
    Ok(margin.max(inner))
}

/// Offsets of a sample along a segment graph's only edge.
pub fn segment_offsets(segment: &MetricGraph, x: &PointSet) -> Result<Vec<f64>> {
    if !segment.is_segment() {
        return Err(Error::InvalidParameter(
            "graph is not a single segment".into(),
        ));
    }
    let e = segment.edge(EdgeId(0));
    Ok(x.points()
        .iter()
        .map(|p| match *p {
            GraphPoint::Vertex(v) if v == e.u => 0.0,
            GraphPoint::Vertex(_) => e.length,
            GraphPoint::Edge { offset, .. } => offset,
        })
        .collect())
}

/// Certificate form of [`interval_gh_exact`] for a segment graph. The
/// recorded upper bound is the Hausdorff distance of the centered
/// isometric copy, which equals the value.
pub fn interval_certificate(segment: &MetricGraph, x: &PointSet) -> Result<BoundCertificate> {
    require_nonempty(&[x])?;
    let offsets = segment_offsets(segment, x)?;
    let value = interval_gh_exact(0.0, segment.edge(EdgeId(0)).length, &offsets)?;
    Ok(BoundCertificate::new(
        Theorem::IntervalCorollary,
        Target::GraphToSubset,
        Some(value),
    )
    .conclude(value, BoundKind::ExactValue))
}

/// Every applicable certificate, sorted by value (largest first).
///
/// Without `y` the target is `d_GH(G, X)`: diameter bound, the tree
/// theorem on trees, the interval formula on a segment, the circle theorem
/// on a circle and the graph theorem whenever `G` has loops. With `y` the
/// target is `d_GH(X, Y)` and the pair versions are used instead.
pub fn best_bound(
    graph: &MetricGraph,
    x: &PointSet,
    y: Option<&PointSet>,
) -> Result<Vec<BoundCertificate>> {
    require_nonempty(&[x])?;
    let mut out = Vec::new();
    match y {
        None => {
            let h = hausdorff_graph_to_set(graph, x)?;
            let mut diam = diameter_bound(graph.graph_diameter(), graph.set_diameter(x)?);
            diam.target = Target::GraphToSubset;
            diam.upper_bound = Some(h);
            out.push(diam);
            if graph.is_tree() {
                out.push(tree_equality(graph, x)?);
                if graph.is_segment() {
                    out.push(interval_certificate(graph, x)?);
                }
            } else {
                if graph.is_circle() {
                    out.push(circle_bound(graph, x)?);
                }
                out.push(graph_bound(graph, x)?);
            }
        }
        Some(y) => {
            require_nonempty(&[y])?;
            let dxy = hausdorff_sets(graph, x, y)?;
            let mut diam = diameter_bound(graph.set_diameter(x)?, graph.set_diameter(y)?);
            diam.upper_bound = Some(dxy);
            out.push(diam);
            if graph.is_tree() {
                out.push(tree_pair_bound(graph, x, y)?);
            } else {
                if graph.is_circle() {
                    out.push(circle_pair_bound(graph, x, y)?);
                }
                out.push(graph_pair_bound(graph, x, y)?);
            }
        }
    }
    out.sort_by(|a, b| b.value.total_cmp(&a.value).then(a.theorem.cmp(&b.theorem)));
    Ok(out)
}
