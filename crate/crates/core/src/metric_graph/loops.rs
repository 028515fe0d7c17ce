use super::{EdgeId, MetricGraph, VertexId};
use crate::{Error, Result};

pub const DEFAULT_LOOP_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// From the edge's `u` endpoint to `v`.
    Forward,
    Backward,
}

/// An undirected simple cycle, stored as a cyclic walk of edges.
///
/// A simple cycle is determined by its edge set, so two loops compare equal
/// exactly when they use the same edges; rotation and reversal of the walk
/// do not matter.
#[derive(Debug, Clone)]
pub struct SimpleLoop {
    pub steps: Vec<(EdgeId, Direction)>,
    pub length: f64,
}

impl SimpleLoop {
    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self.steps.iter().map(|s| s.0).collect();
        ids.sort();
        ids
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl PartialEq for SimpleLoop {
    fn eq(&self, other: &Self) -> bool {
        self.edge_set() == other.edge_set()
    }
}

impl Eq for SimpleLoop {}

impl MetricGraph {
    pub fn enumerate_simple_loops(&self) -> Result<Vec<SimpleLoop>> {
        self.enumerate_simple_loops_capped(DEFAULT_LOOP_CAP)
    }

    /// Every simple cycle once. Self-loops are one-edge cycles and a pair of
    /// parallel edges is a two-edge cycle.
    ///
    /// Each cycle of two or more edges is rooted at its smallest vertex and
    /// found in both traversal directions; only the direction whose first
    /// edge id is smaller than its last is kept.
    pub fn enumerate_simple_loops_capped(&self, cap: usize) -> Result<Vec<SimpleLoop>> {
        let mut out = Vec::new();
        for (i, e) in self.edges().iter().enumerate() {
            if e.is_self_loop() {
                push_capped(
                    &mut out,
                    cap,
                    SimpleLoop {
                        steps: vec![(EdgeId(i), Direction::Forward)],
                        length: e.length,
                    },
                )?;
            }
        }

        let n = self.vertex_count();
        let mut on_path = vec![false; n];
        let mut path: Vec<(EdgeId, Direction)> = Vec::new();
        for root in 0..n {
            on_path[root] = true;
            self.extend_cycles(
                VertexId(root),
                VertexId(root),
                &mut on_path,
                &mut path,
                &mut out,
                cap,
            )?;
            on_path[root] = false;
        }
        Ok(out)
    }

    fn extend_cycles(
        &self,
        root: VertexId,
        at: VertexId,
        on_path: &mut [bool],
        path: &mut Vec<(EdgeId, Direction)>,
        out: &mut Vec<SimpleLoop>,
        cap: usize,
    ) -> Result<()> {
        for &eid in self.incident_edges(at) {
            let e = self.edge(eid);
            if e.is_self_loop() || path.last().is_some_and(|last| last.0 == eid) {
                continue;
            }
            let (next, dir) = if e.u == at {
                (e.v, Direction::Forward)
            } else {
                (e.u, Direction::Backward)
            };
            if next == root {
                if path.first().is_some_and(|first| first.0 < eid) {
                    let mut steps = path.clone();
                    steps.push((eid, dir));
                    let length = steps.iter().map(|s| self.edge(s.0).length).sum();
                    push_capped(out, cap, SimpleLoop { steps, length })?;
                }
                continue;
            }
            if next.0 < root.0 || on_path[next.0] {
                continue;
            }
            on_path[next.0] = true;
            path.push((eid, dir));
            self.extend_cycles(root, next, on_path, path, out, cap)?;
            path.pop();
            on_path[next.0] = false;
        }
        Ok(())
    }
}

fn push_capped(out: &mut Vec<SimpleLoop>, cap: usize, lp: SimpleLoop) -> Result<()> {
    if out.len() >= cap {
        return Err(Error::LoopCountGuardExceeded(cap));
    }
    out.push(lp);
    Ok(())
}
