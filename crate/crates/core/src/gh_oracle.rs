//! Exact Gromov–Hausdorff distance between small finite metric spaces.
//!
//! Every correspondence contains `graph(f) ∪ graph(g)ᵀ` for some pair of
//! maps `f: X → Y`, `g: Y → X`, and shrinking a correspondence never
//! increases its distortion. The minimum over all correspondences is
//! therefore the minimum over map pairs, `|Y|^|X| · |X|^|Y|` candidates.
//!
//! The search is exact branch and bound in two phases. The first finds the
//! optimal distortion with any slot order and aggressive pruning (and may be
//! split across threads). The second walks map pairs in lexicographic order
//! of the `(f, g)` encoding, pruning only what exceeds the optimum, and stops
//! at the first optimal leaf. The witness is thus the lexicographically
//! smallest optimal pair, independent of how the first phase was split.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::exec::Execution;
use crate::metric_graph::{MetricGraph, PointSet};
use crate::{Error, Result, TAU};

/// Default work guard, in map-pair evaluations.
pub const DEFAULT_GUARD: f64 = 1e8;

/// Default point-count cap for [`is_isometric`].
pub const DEFAULT_ISOMETRY_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetricSpace {
    n: usize,
    d: Vec<f64>,
}

impl FiniteMetricSpace {
    /// Validates a row-major distance matrix: zero diagonal, symmetry,
    /// positive off-diagonal entries and the triangle inequality (within τ).
    pub fn new(n: usize, d: Vec<f64>) -> Result<Self> {
        let space = Self::from_geodesic(n, d)?;
        let at = |i: usize, j: usize| space.get(i, j);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if at(i, k) > at(i, j) + at(j, k) + TAU {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails for ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(space)
    }

    /// The `O(n²)` checks of [`FiniteMetricSpace::new`], for matrices that
    /// come from a metric and so satisfy the triangle inequality already.
    fn from_geodesic(n: usize, d: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMetric("metric space must be nonempty".into()));
        }
        if d.len() != n * n {
            return Err(Error::InvalidMetric(format!(
                "expected {} entries, got {}",
                n * n,
                d.len()
            )));
        }
        let at = |i: usize, j: usize| d[i * n + j];
        for i in 0..n {
            if at(i, i) != 0.0 {
                return Err(Error::InvalidMetric(format!(
                    "d({i},{i}) = {} is not zero",
                    at(i, i)
                )));
            }
            for j in 0..n {
                let v = at(i, j);
                if !v.is_finite() {
                    return Err(Error::InvalidMetric(format!("d({i},{j}) is not finite")));
                }
                if i != j && !(v > 0.0) {
                    return Err(Error::InvalidMetric(format!(
                        "d({i},{j}) = {v} is not positive"
                    )));
                }
                if (v - at(j, i)).abs() > TAU {
                    return Err(Error::InvalidMetric(format!("d({i},{j}) != d({j},{i})")));
                }
            }
        }
        Ok(Self { n, d })
    }

    /// Points of the real line with the absolute-difference metric.
    pub fn from_line(points: &[f64]) -> Result<Self> {
        let n = points.len();
        let d = (0..n * n)
            .map(|k| (points[k / n] - points[k % n]).abs())
            .collect();
        Self::from_geodesic(n, d)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn matrix(&self) -> &[f64] {
        &self.d
    }

    pub fn diameter(&self) -> f64 {
        self.d.iter().copied().fold(0.0, f64::max)
    }

    /// Relabels points: new point `i` is old point `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let d = (0..n * n)
            .map(|k| self.get(perm[k / n], perm[k % n]))
            .collect();
        Self { n, d }
    }
}

/// A relation between index sets `0..|X|` and `0..|Y|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pub pairs: Vec<(usize, usize)>,
}

impl Correspondence {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        Self { pairs }
    }

    /// `graph(forward) ∪ graph(backward)ᵀ`, sorted and deduplicated.
    pub fn from_maps(forward: &[usize], backward: &[usize]) -> Self {
        let mut pairs: Vec<(usize, usize)> = forward
            .iter()
            .enumerate()
            .map(|(x, &y)| (x, y))
            .chain(backward.iter().enumerate().map(|(y, &x)| (x, y)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Self { pairs }
    }

    pub fn validate(&self, nx: usize, ny: usize) -> Result<()> {
        let mut hit_x = vec![false; nx];
        let mut hit_y = vec![false; ny];
        for &(x, y) in &self.pairs {
            if x >= nx || y >= ny {
                return Err(Error::NotACorrespondence(format!(
                    "pair ({x}, {y}) out of range"
                )));
            }
            hit_x[x] = true;
            hit_y[y] = true;
        }
        if let Some(x) = hit_x.iter().position(|h| !h) {
            return Err(Error::NotACorrespondence(format!(
                "point {x} of X is unmatched"
            )));
        }
        if let Some(y) = hit_y.iter().position(|h| !h) {
            return Err(Error::NotACorrespondence(format!(
                "point {y} of Y is unmatched"
            )));
        }
        Ok(())
    }
}

/// `max |d_X(x, x') - d_Y(y, y')|` over pairs of related pairs.
pub fn distortion(
    r: &Correspondence,
    dx: &FiniteMetricSpace,
    dy: &FiniteMetricSpace,
) -> Result<f64> {
    r.validate(dx.len(), dy.len())?;
    let mut worst = 0.0f64;
    for (i, &(x, y)) in r.pairs.iter().enumerate() {
        for &(x2, y2) in &r.pairs[i + 1..] {
            worst = worst.max((dx.get(x, x2) - dy.get(y, y2)).abs());
        }
    }
    Ok(worst)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GhSolution {
    /// Half the minimal distortion.
    pub value: f64,
    pub witness: Correspondence,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

/// Number of map pairs the exhaustive search ranges over.
pub fn search_size(nx: usize, ny: usize) -> f64 {
    (ny as f64).powi(nx as i32) * (nx as f64).powi(ny as i32)
}

pub fn gh_exact(dx: &FiniteMetricSpace, dy: &FiniteMetricSpace, guard: f64) -> Result<GhSolution> {
    gh_exact_with(dx, dy, guard, Execution::default())
}

pub fn gh_exact_with(
    dx: &FiniteMetricSpace,
    dy: &FiniteMetricSpace,
    guard: f64,
    exec: Execution,
) -> Result<GhSolution> {
    let required = search_size(dx.len(), dy.len());
    if required > guard {
        return Err(Error::GuardExceeded { required, guard });
    }
    let search = Search { dx, dy };
    let optimum = search.optimal_distortion(exec);
    let (forward, backward) = search.first_optimal_in_lex_order(optimum);
    Ok(GhSolution {
        value: 0.5 * optimum,
        witness: Correspondence::from_maps(&forward, &backward),
        forward,
        backward,
    })
}

/// A slot fixes either `f(x)` or `g(y)`; its choices produce pairs `(x, y)`.
#[derive(Debug, Clone, Copy)]
enum Slot {
    Forward(usize),
    Backward(usize),
}

struct Search<'a> {
    dx: &'a FiniteMetricSpace,
    dy: &'a FiniteMetricSpace,
}

impl Search<'_> {
    fn pair(&self, slot: Slot, choice: usize) -> (usize, usize) {
        match slot {
            Slot::Forward(x) => (x, choice),
            Slot::Backward(y) => (choice, y),
        }
    }

    fn choices(&self, slot: Slot) -> usize {
        match slot {
            Slot::Forward(_) => self.dy.len(),
            Slot::Backward(_) => self.dx.len(),
        }
    }

    fn slots(&self) -> Vec<Slot> {
        (0..self.dx.len())
            .map(Slot::Forward)
            .chain((0..self.dy.len()).map(Slot::Backward))
            .collect()
    }

    fn width(&self) -> usize {
        self.dx.len().max(self.dy.len())
    }

    /// Cost table with no pairs fixed: every real choice costs 0, padding
    /// entries are infinite.
    fn empty_table(&self, slots: &[Slot]) -> Vec<f64> {
        let w = self.width();
        let mut table = vec![f64::INFINITY; slots.len() * w];
        for (s, &slot) in slots.iter().enumerate() {
            table[s * w..s * w + self.choices(slot)].fill(0.0);
        }
        table
    }

    /// Raises every table entry to cover its distortion against `pair`.
    fn fix(&self, slots: &[Slot], table: &mut [f64], pair: (usize, usize)) {
        let w = self.width();
        for (s, &slot) in slots.iter().enumerate() {
            for c in 0..self.choices(slot) {
                let q = self.pair(slot, c);
                let d = (self.dx.get(q.0, pair.0) - self.dy.get(q.1, pair.1)).abs();
                let entry = &mut table[s * w + c];
                *entry = entry.max(d);
            }
        }
    }

    fn row<'t>(&self, table: &'t [f64], s: usize) -> &'t [f64] {
        let w = self.width();
        &table[s * w..(s + 1) * w]
    }

    /// Open slot whose cheapest choice is most expensive, with that cost.
    fn most_constrained(&self, table: &[f64], open: &[bool]) -> Option<(usize, f64)> {
        let mut pick: Option<(usize, f64)> = None;
        for (s, _) in open.iter().enumerate().filter(|(_, &o)| o) {
            let cheapest = self
                .row(table, s)
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min);
            if pick.is_none_or(|(_, c)| cheapest > c) {
                pick = Some((s, cheapest));
            }
        }
        pick
    }

    fn optimal_distortion(&self, exec: Execution) -> f64 {
        let slots = self.slots();
        let best = AtomicU64::new(f64::INFINITY.to_bits());
        let root = Node {
            table: self.empty_table(&slots),
            open: vec![true; slots.len()],
            cost: 0.0,
        };
        // Seed the bound with a greedy leaf so pruning bites immediately.
        self.greedy(&slots, root.clone(), &best);

        // Expand two levels; the subtrees share the global bound.
        let mut frontier = vec![root];
        for _ in 0..2 {
            let mut next = Vec::new();
            for node in frontier {
                match self.children(&slots, &node, load(&best)) {
                    Some(children) => next.extend(children),
                    None => {
                        best.fetch_min(node.cost.to_bits(), Ordering::Relaxed);
                    }
                }
            }
            frontier = next;
        }
        let (frontier, slots, best) = (&frontier, &slots, &best);
        exec.map_range(frontier.len(), move |i| {
            self.branch_and_bound(slots, &frontier[i], best)
        });
        load(best)
    }

    /// Children of `node` through its most constrained slot, cheapest
    /// first, dropping those that cannot beat `bound`. `None` at a leaf.
    fn children(&self, slots: &[Slot], node: &Node, bound: f64) -> Option<Vec<Node>> {
        let (s, _) = self.most_constrained(&node.table, &node.open)?;
        let row = self.row(&node.table, s);
        let mut order: Vec<usize> = (0..self.choices(slots[s])).collect();
        order.sort_by(|&a, &b| row[a].total_cmp(&row[b]));
        let mut out = Vec::new();
        for c in order {
            let cost = node.cost.max(row[c]);
            if cost >= bound {
                break;
            }
            let mut child = node.clone();
            child.open[s] = false;
            child.cost = cost;
            self.fix(slots, &mut child.table, self.pair(slots[s], c));
            out.push(child);
        }
        Some(out)
    }

    fn greedy(&self, slots: &[Slot], mut node: Node, best: &AtomicU64) {
        while let Some(children) = self.children(slots, &node, f64::INFINITY) {
            node = children
                .into_iter()
                .next()
                .expect("every slot has a choice");
        }
        best.fetch_min(node.cost.to_bits(), Ordering::Relaxed);
    }

    fn branch_and_bound(&self, slots: &[Slot], node: &Node, best: &AtomicU64) {
        let bound = load(best);
        // no open slot can be filled below the bound
        if self
            .most_constrained(&node.table, &node.open)
            .is_some_and(|(_, c)| node.cost.max(c) >= bound)
        {
            return;
        }
        match self.children(slots, node, bound) {
            // nonnegative floats order like their bit patterns
            None => {
                best.fetch_min(node.cost.to_bits(), Ordering::Relaxed);
            }
            Some(children) => {
                for child in &children {
                    self.branch_and_bound(slots, child, best);
                }
            }
        }
    }

    fn first_optimal_in_lex_order(&self, optimum: f64) -> (Vec<usize>, Vec<usize>) {
        let slots = self.slots();
        let mut table = self.empty_table(&slots);
        let mut choices = Vec::with_capacity(slots.len());
        let found = self.lex_descend(&slots, &mut table, optimum, &mut choices);
        assert!(found, "an optimal map pair exists by construction");
        let backward = choices.split_off(self.dx.len());
        (choices, backward)
    }

    /// Slots are filled in index order, so the first leaf reached is the
    /// lexicographically smallest. A branch is cut once some later slot has
    /// no choice within the optimum.
    fn lex_descend(
        &self,
        slots: &[Slot],
        table: &mut [f64],
        optimum: f64,
        choices: &mut Vec<usize>,
    ) -> bool {
        let depth = choices.len();
        if depth == slots.len() {
            return true;
        }
        let slot = slots[depth];
        for c in 0..self.choices(slot) {
            if self.row(table, depth)[c] > optimum {
                continue;
            }
            let mut next = table.to_vec();
            self.fix(slots, &mut next, self.pair(slot, c));
            let feasible =
                (depth + 1..slots.len()).all(|s| self.row(&next, s).iter().any(|&v| v <= optimum));
            if !feasible {
                continue;
            }
            choices.push(c);
            if self.lex_descend(slots, &mut next, optimum, choices) {
                return true;
            }
            choices.pop();
        }
        false
    }
}

#[derive(Debug, Clone)]
struct Node {
    /// `table[s * width + c]`: distortion added by choice `c` for slot `s`
    /// against the pairs fixed so far.
    table: Vec<f64>,
    open: Vec<bool>,
    cost: f64,
}

fn load(best: &AtomicU64) -> f64 {
    f64::from_bits(best.load(Ordering::Relaxed))
}

/// Distance matrix of a point set under the graph metric.
pub fn restrict_metric(graph: &MetricGraph, set: &PointSet) -> Result<FiniteMetricSpace> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let pts = set.points();
    let n = pts.len();
    let mut d = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = graph.dist_unchecked(&pts[i], &pts[j]);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    FiniteMetricSpace::from_geodesic(n, d)
}

/// Searches for a bijection `perm` with `dx(i, j) ≈ dy(perm[i], perm[j])`
/// within τ. Returns `Ok(None)` when the spaces are not isometric.
pub fn is_isometric(
    dx: &FiniteMetricSpace,
    dy: &FiniteMetricSpace,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    let n = dx.len();
    if n != dy.len() {
        return Ok(None);
    }
    if n > cap {
        return Err(Error::GuardExceeded {
            required: n as f64,
            guard: cap as f64,
        });
    }
    if (dx.diameter() - dy.diameter()).abs() > TAU {
        return Ok(None);
    }

    let sorted_rows = |s: &FiniteMetricSpace| -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| {
                let mut row: Vec<f64> = (0..n).map(|j| s.get(i, j)).collect();
                row.sort_by(f64::total_cmp);
                row
            })
            .collect()
    };
    let (rows_x, rows_y) = (sorted_rows(dx), sorted_rows(dy));
    let sums_y: Vec<f64> = rows_y.iter().map(|r| r.iter().sum()).collect();
    let mut by_sum: Vec<usize> = (0..n).collect();
    by_sum.sort_by(|&a, &b| sums_y[a].total_cmp(&sums_y[b]));
    let sum_tol = TAU * n as f64;

    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for row in &rows_x {
        let sum: f64 = row.iter().sum();
        let start = by_sum.partition_point(|&j| sums_y[j] < sum - sum_tol);
        let cands: Vec<usize> = by_sum[start..]
            .iter()
            .take_while(|&&j| sums_y[j] <= sum + sum_tol)
            .copied()
            .filter(|&j| {
                row.iter()
                    .zip(&rows_y[j])
                    .all(|(a, b)| (a - b).abs() <= TAU)
            })
            .collect();
        if cands.is_empty() {
            return Ok(None);
        }
        candidates.push(cands);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| candidates[i].len());
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        depth: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        dx: &FiniteMetricSpace,
        dy: &FiniteMetricSpace,
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&i) = order.get(depth) else {
            return true;
        };
        for &j in &candidates[i] {
            if used[j] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&k| (dx.get(i, k) - dy.get(j, perm[k])).abs() <= TAU);
            if !consistent {
                continue;
            }
            perm[i] = j;
            used[j] = true;
            if assign(depth + 1, order, candidates, dx, dy, perm, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    Ok(assign(0, &order, &candidates, dx, dy, &mut perm, &mut used).then_some(perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric_graph::{EdgeId, GraphPoint};
    use std::f64::consts::PI;

    fn equilateral(n: usize, side: f64) -> FiniteMetricSpace {
        let d = (0..n * n)
            .map(|k| if k / n == k % n { 0.0 } else { side })
            .collect();
        FiniteMetricSpace::new(n, d).unwrap()
    }

    /// Independent oracle: every relation (as a bitmask over X×Y) that is a
    /// correspondence, scored by its distortion.
    fn all_relations_oracle(dx: &FiniteMetricSpace, dy: &FiniteMetricSpace) -> f64 {
        let (nx, ny) = (dx.len(), dy.len());
        let cells: Vec<(usize, usize)> =
            (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y))).collect();
        let mut best = f64::INFINITY;
        for mask in 1u32..(1 << cells.len()) {
            let r = Correspondence::new(
                cells
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &c)| c)
                    .collect(),
            );
            if let Ok(d) = distortion(&r, dx, dy) {
                best = best.min(d);
            }
        }
        0.5 * best
    }

    #[test]
    fn validation() {
        assert!(FiniteMetricSpace::new(2, vec![0.0, 1.0, 1.0, 0.0]).is_ok());
        assert!(FiniteMetricSpace::new(2, vec![0.0, 1.0, 2.0, 0.0]).is_err());
        assert!(FiniteMetricSpace::new(2, vec![0.0, 0.0, 0.0, 0.0]).is_err());
        assert!(
            FiniteMetricSpace::new(3, vec![0.0, 1.0, 5.0, 1.0, 0.0, 1.0, 5.0, 1.0, 0.0]).is_err()
        );
        assert!(FiniteMetricSpace::new(0, vec![]).is_err());
    }

    #[test]
    fn distortion_examples() {
        let three = FiniteMetricSpace::from_line(&[0.0, 3.0]).unwrap();
        let one = FiniteMetricSpace::from_line(&[0.0, 1.0]).unwrap();
        let id = Correspondence::new(vec![(0, 0), (1, 1)]);
        assert_eq!(distortion(&id, &three, &three).unwrap(), 0.0);
        assert_eq!(distortion(&id, &three, &one).unwrap(), 2.0);
        let collapsed = Correspondence::new(vec![(0, 0), (1, 0), (1, 1)]);
        assert!(distortion(&collapsed, &three, &one).unwrap() >= three.diameter() - one.diameter());
        let partial = Correspondence::new(vec![(0, 0)]);
        assert!(matches!(
            distortion(&partial, &three, &one),
            Err(Error::NotACorrespondence(_))
        ));
    }

    #[test]
    fn exact_examples() {
        let x = FiniteMetricSpace::from_line(&[0.0, 2.0]).unwrap();
        assert_eq!(gh_exact(&x, &x, DEFAULT_GUARD).unwrap().value, 0.0);
        let point = FiniteMetricSpace::from_line(&[0.0]).unwrap();
        assert_eq!(gh_exact(&x, &point, DEFAULT_GUARD).unwrap().value, 1.0);
        // three mutually distant points vs two: some pair must collapse
        let sol = gh_exact(&equilateral(3, 2.0), &equilateral(2, 2.0), DEFAULT_GUARD).unwrap();
        assert_eq!(sol.value, 1.0);
        assert_eq!(
            sol.value,
            all_relations_oracle(&equilateral(3, 2.0), &equilateral(2, 2.0))
        );
    }

    #[test]
    fn witness_certifies_value_and_is_lexicographically_first() {
        let x = FiniteMetricSpace::from_line(&[0.0, 1.0, 3.5]).unwrap();
        let y = FiniteMetricSpace::from_line(&[0.0, 2.0, 2.5]).unwrap();
        let sol = gh_exact(&x, &y, DEFAULT_GUARD).unwrap();
        assert_eq!(distortion(&sol.witness, &x, &y).unwrap(), 2.0 * sol.value);
        assert_eq!(sol.value, all_relations_oracle(&x, &y));
        // enumerate all map pairs in lex order; the first optimal one must match
        let mut first = None;
        'outer: for code in 0..27usize * 27 {
            let digits: Vec<usize> = (0..6)
                .map(|k| (code / 3usize.pow(5 - k as u32)) % 3)
                .collect();
            let r = Correspondence::from_maps(&digits[..3], &digits[3..]);
            if distortion(&r, &x, &y).unwrap() == 2.0 * sol.value {
                first = Some(digits);
                break 'outer;
            }
        }
        let first = first.unwrap();
        assert_eq!(sol.forward, first[..3]);
        assert_eq!(sol.backward, first[3..]);
    }

    #[test]
    fn execution_modes_agree() {
        let x = FiniteMetricSpace::from_line(&[0.0, 0.4, 1.1, 1.3, 2.0]).unwrap();
        let y = FiniteMetricSpace::from_line(&[0.0, 0.9, 1.0, 2.2]).unwrap();
        let a = gh_exact_with(&x, &y, DEFAULT_GUARD, Execution::Sequential).unwrap();
        let b = gh_exact_with(&x, &y, DEFAULT_GUARD, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn guard() {
        let x = FiniteMetricSpace::from_line(&(0..12).map(f64::from).collect::<Vec<_>>()).unwrap();
        assert!(matches!(
            gh_exact(&x, &x, DEFAULT_GUARD),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn restrict_examples() {
        let seg = MetricGraph::segment(1.0).unwrap();
        let single = PointSet::from_offsets(&seg, EdgeId(0), &[0.4]).unwrap();
        assert_eq!(restrict_metric(&seg, &single).unwrap().matrix(), &[0.0]);
        let ends = restrict_metric(&seg, &PointSet::vertices(&seg)).unwrap();
        assert_eq!(ends.get(0, 1), 1.0);
        let circle = MetricGraph::circle(2.0 * PI).unwrap();
        let anti = PointSet::new(
            &circle,
            [
                GraphPoint::Vertex(crate::VertexId(0)),
                GraphPoint::on_edge(&circle, EdgeId(0), PI).unwrap(),
            ],
        )
        .unwrap();
        assert!((restrict_metric(&circle, &anti).unwrap().get(0, 1) - PI).abs() < 1e-15);
        assert_eq!(
            restrict_metric(&seg, &PointSet::empty()),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn isometry_examples() {
        let x = FiniteMetricSpace::from_line(&[0.0, 1.0, 3.0, 7.0]).unwrap();
        let perm = [2, 0, 3, 1];
        let y = x.permuted(&perm);
        let found = is_isometric(&x, &y, DEFAULT_ISOMETRY_CAP).unwrap().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((x.get(i, j) - y.get(found[i], found[j])).abs() <= TAU);
            }
        }
        let z = FiniteMetricSpace::from_line(&[0.0, 1.0, 3.0, 8.0]).unwrap();
        assert_eq!(is_isometric(&x, &z, DEFAULT_ISOMETRY_CAP).unwrap(), None);
        // same sorted rows would not fool the backtracking
        let square = FiniteMetricSpace::new(
            4,
            vec![
                0., 1., 2., 1., 1., 0., 1., 2., 2., 1., 0., 1., 1., 2., 1., 0.,
            ],
        )
        .unwrap();
        assert!(is_isometric(&square, &square, 2).is_err());
        assert!(is_isometric(&square, &square, 4).unwrap().is_some());
    }
}
