//! Closed-form distance profiles along edges.
//!
//! Restricted to one edge, the distance to a finite source set is the
//! distance on the real line to a finite set of "cone centers": sources on
//! the edge sit at their offset, everything reachable through the `u`
//! endpoint sits at `-d(u, A)` and everything through `v` at
//! `length + d(v, A)`. Suprema, sublevel sets and thickenings all reduce to
//! sorted-center arithmetic.
//!
//! For two edges at once the distance is a minimum of affine functions of the
//! two offsets (slopes ±1), so its maximum over a box is a small linear
//! program solved by vertex enumeration.

use super::{EdgeId, GraphPoint, MetricGraph};

#[derive(Debug, Clone)]
pub(crate) struct EdgeProfile {
    pub length: f64,
    /// Sorted ascending.
    pub centers: Vec<f64>,
}

impl EdgeProfile {
    pub fn new(graph: &MetricGraph, edge: EdgeId, sources: &[GraphPoint]) -> Self {
        let e = graph.edge(edge);
        let via_u = graph.vertex_to_points(e.u, sources);
        let via_v = graph.vertex_to_points(e.v, sources);
        let mut centers = vec![-via_u, e.length + via_v];
        centers.extend(sources.iter().filter_map(|p| match *p {
            GraphPoint::Edge { edge: on, offset } if on == edge => Some(offset),
            _ => None,
        }));
        centers.sort_by(f64::total_cmp);
        Self {
            length: e.length,
            centers,
        }
    }

    /// Distance from the point at offset `t` to the source set.
    pub fn value(&self, t: f64) -> f64 {
        let i = self.centers.partition_point(|&c| c < t);
        let right = self.centers.get(i).map_or(f64::INFINITY, |&c| c - t);
        let left = i
            .checked_sub(1)
            .map_or(f64::INFINITY, |j| t - self.centers[j]);
        left.min(right)
    }

    /// Supremum of [`value`](Self::value) over the edge minus the closed
    /// `covered` intervals (where the distance is zero by definition).
    pub fn sup_outside(&self, covered: &[(f64, f64)]) -> f64 {
        let is_covered = |t: f64| covered.iter().any(|&(lo, hi)| lo <= t && t <= hi);
        let midpoints = self
            .centers
            .windows(2)
            .map(|w| 0.5 * (w[0] + w[1]))
            .filter(|&m| m > 0.0 && m < self.length);
        [0.0, self.length]
            .into_iter()
            .chain(midpoints)
            .filter(|&t| !is_covered(t))
            .map(|t| self.value(t))
            .fold(0.0, f64::max)
    }

    pub fn sup(&self) -> f64 {
        self.sup_outside(&[])
    }

    /// `{t in [0, length] : value(t) < r}` as sorted disjoint open intervals.
    /// Intervals reaching an edge end are reported with that end as bound;
    /// whether the end vertex itself is covered is decided separately.
    pub fn sublevel(&self, r: f64) -> Vec<(f64, f64)> {
        let mut out: Vec<(f64, f64)> = Vec::new();
        for &c in &self.centers {
            let lo = (c - r).max(0.0);
            let hi = (c + r).min(self.length);
            if lo >= hi {
                continue;
            }
            match out.last_mut() {
                // open intervals sharing only an endpoint leave that point uncovered
                Some(last) if lo < last.1 => last.1 = last.1.max(hi),
                _ => out.push((lo, hi)),
            }
        }
        out
    }
}

/// Range of distances between two sets of points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceRange {
    pub min: f64,
    pub max: f64,
}

/// `z <= a*t + b*s + c` for the distance between offsets `t` and `s`.
#[derive(Debug, Clone, Copy)]
struct Affine {
    a: f64,
    b: f64,
    c: f64,
}

impl Affine {
    fn at(&self, t: f64, s: f64) -> f64 {
        self.a * t + self.b * s + self.c
    }
}

impl MetricGraph {
    /// Exact minimum and maximum of `d(x, y)` over `x` at offsets `span_e`
    /// of edge `e` and `y` at offsets `span_f` of edge `f` (closed spans).
    pub fn segment_distance_range(
        &self,
        e: EdgeId,
        span_e: (f64, f64),
        f: EdgeId,
        span_f: (f64, f64),
    ) -> DistanceRange {
        let (ee, ef) = (self.edge(e), self.edge(f));
        let (le, lf) = (ee.length, ef.length);
        let d = |a, b| self.vertex_distance(a, b);
        let routes = [
            Affine {
                a: 1.0,
                b: 1.0,
                c: d(ee.u, ef.u),
            },
            Affine {
                a: 1.0,
                b: -1.0,
                c: lf + d(ee.u, ef.v),
            },
            Affine {
                a: -1.0,
                b: 1.0,
                c: le + d(ee.v, ef.u),
            },
            Affine {
                a: -1.0,
                b: -1.0,
                c: le + lf + d(ee.v, ef.v),
            },
        ];
        let corners = [
            (span_e.0, span_f.0),
            (span_e.0, span_f.1),
            (span_e.1, span_f.0),
            (span_e.1, span_f.1),
        ];
        let mut min = routes
            .iter()
            .flat_map(|r| corners.iter().map(move |&(t, s)| r.at(t, s)))
            .fold(f64::INFINITY, f64::min);

        let max = if e == f {
            let gap = (span_f.0 - span_e.1).max(span_e.0 - span_f.1).max(0.0);
            min = min.min(gap);
            // split on the sign of t - s so |t - s| becomes affine
            let forward = Affine {
                a: -1.0,
                b: 1.0,
                c: 0.0,
            };
            let backward = Affine {
                a: 1.0,
                b: -1.0,
                c: 0.0,
            };
            let mut with_fwd = routes.to_vec();
            with_fwd.push(forward);
            let mut with_bwd = routes.to_vec();
            with_bwd.push(backward);
            max_of_min_affine(
                &with_fwd,
                span_e,
                span_f,
                Some(Affine {
                    a: 1.0,
                    b: -1.0,
                    c: 0.0,
                }),
            )
            .max(max_of_min_affine(
                &with_bwd,
                span_e,
                span_f,
                Some(Affine {
                    a: -1.0,
                    b: 1.0,
                    c: 0.0,
                }),
            ))
        } else {
            max_of_min_affine(&routes, span_e, span_f, None)
        };
        DistanceRange { min, max }
    }
}

/// Maximize `min_i pieces_i(t, s)` over the box, optionally restricted to
/// `region(t, s) <= 0`. Returns `-inf` when the feasible set is empty.
fn max_of_min_affine(
    pieces: &[Affine],
    span_t: (f64, f64),
    span_s: (f64, f64),
    region: Option<Affine>,
) -> f64 {
    // rows: [coef_t, coef_s, coef_z, rhs] meaning row · (t, s, z) <= rhs
    let mut rows: Vec<[f64; 4]> = pieces.iter().map(|p| [-p.a, -p.b, 1.0, p.c]).collect();
    rows.push([1.0, 0.0, 0.0, span_t.1]);
    rows.push([-1.0, 0.0, 0.0, -span_t.0]);
    rows.push([0.0, 1.0, 0.0, span_s.1]);
    rows.push([0.0, -1.0, 0.0, -span_s.0]);
    if let Some(r) = region {
        rows.push([r.a, r.b, 0.0, -r.c]);
    }

    let feasible = |x: [f64; 3]| {
        rows.iter().all(|row| {
            let lhs = row[0] * x[0] + row[1] * x[1] + row[2] * x[2];
            lhs <= row[3] + 1e-9 * (1.0 + row[3].abs())
        })
    };

    let mut best = f64::NEG_INFINITY;
    let n = rows.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let Some(x) = solve3(&rows[i], &rows[j], &rows[k]) else {
                    continue;
                };
                if x[2] > best && feasible(x) {
                    // re-evaluate exactly at the clamped vertex
                    let t = x[0].clamp(span_t.0, span_t.1);
                    let s = x[1].clamp(span_s.0, span_s.1);
                    let z = pieces
                        .iter()
                        .map(|p| p.at(t, s))
                        .fold(f64::INFINITY, f64::min);
                    best = best.max(z);
                }
            }
        }
    }
    best
}

fn solve3(r0: &[f64; 4], r1: &[f64; 4], r2: &[f64; 4]) -> Option<[f64; 3]> {
    let det3 = |c0: [f64; 3], c1: [f64; 3], c2: [f64; 3]| {
        c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
            + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1])
    };
    let col = |idx: usize| [r0[idx], r1[idx], r2[idx]];
    let (a, b, c, rhs) = (col(0), col(1), col(2), col(3));
    let det = det3(a, b, c);
    if det.abs() < 1e-12 {
        return None;
    }
    Some([
        det3(rhs, b, c) / det,
        det3(a, rhs, c) / det,
        det3(a, b, rhs) / det,
    ])
}
