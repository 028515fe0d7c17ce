use std::fs;
use std::path::{Path, PathBuf};

use metric_gh::constructions::{circle_six_point, epsilon_net, star_counterexample};
use metric_gh::gh_bounds::{best_bound, circle_bound};
use metric_gh::gh_oracle::{distortion, gh_exact, restrict_metric, search_size};
use metric_gh::hausdorff::{
    directed_hausdorff_boundary, directed_hausdorff_sets, hausdorff_graph_to_set, hausdorff_sets,
};
use metric_gh::{
    BoundCertificate, EdgeId, Error, FiniteMetricSpace, GraphPoint, MetricGraph, PointSet, Target,
    Theorem, VertexId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::format::{
    encode_arcs, encode_graph, encode_points, encode_region, read_graph, read_matrix, read_points,
    round12, tagged, write_json,
};

pub fn hausdorff(graph: &Path, subset: &Path, subset2: Option<&Path>) -> CliResult<Value> {
    let g = read_graph(graph)?;
    let x = read_points(&g, subset)?;
    let mut report = json!({
        "command": "hausdorff",
        "graph_to_subset": tagged("hausdorff_graph_to_set", hausdorff_graph_to_set(&g, &x)?),
        "boundary_to_subset": tagged("directed_hausdorff_boundary", directed_hausdorff_boundary(&g, &x)?),
    });
    if let Some(path) = subset2 {
        let y = read_points(&g, path)?;
        let extra = json!({
            "graph_to_subset2": tagged("hausdorff_graph_to_set", hausdorff_graph_to_set(&g, &y)?),
            "subset_to_subset2": tagged("directed_hausdorff_sets", directed_hausdorff_sets(&g, &x, &y)?),
            "subset2_to_subset": tagged("directed_hausdorff_sets", directed_hausdorff_sets(&g, &y, &x)?),
            "symmetric": tagged("hausdorff_sets", hausdorff_sets(&g, &x, &y)?),
        });
        merge(&mut report, extra);
    }
    Ok(report)
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn upper_op(c: &BoundCertificate) -> &'static str {
    match (c.theorem, c.target) {
        (Theorem::IntervalCorollary, _) => "interval_gh_exact",
        (_, Target::GraphToSubset) => "hausdorff_graph_to_set",
        (_, Target::SubsetPair) => "hausdorff_sets",
    }
}

fn certificate_json(c: &BoundCertificate) -> Value {
    let op = c.theorem.tag();
    json!({
        "theorem": op,
        "kind": c.kind.tag(),
        "value": tagged(op, c.value),
        "upper_bound": c.upper_bound.map(|u| tagged(upper_op(c), u)),
        "hypotheses": c.hypotheses.iter().map(|h| json!({
            "description": h.description,
            "lhs": tagged(op, h.lhs),
            "relation": h.relation.symbol(),
            "rhs": tagged(op, h.rhs),
            "satisfied": h.satisfied,
        })).collect::<Vec<_>>(),
    })
}

fn target_name(pair: bool) -> &'static str {
    if pair {
        "subset_pair"
    } else {
        "graph_to_subset"
    }
}

pub fn bound(graph: &Path, subset: &Path, subset2: Option<&Path>) -> CliResult<Value> {
    let g = read_graph(graph)?;
    let x = read_points(&g, subset)?;
    let y = subset2.map(|p| read_points(&g, p)).transpose()?;
    let certs = best_bound(&g, &x, y.as_ref())?;
    Ok(json!({
        "command": "bound",
        "target": target_name(y.is_some()),
        "certificates": certs.iter().map(certificate_json).collect::<Vec<_>>(),
    }))
}

pub enum OracleInput {
    Matrices(PathBuf, PathBuf),
    Subsets(PathBuf, PathBuf, PathBuf),
}

pub fn oracle(input: OracleInput, guard: f64) -> CliResult<Value> {
    let (dx, dy): (FiniteMetricSpace, FiniteMetricSpace) = match input {
        OracleInput::Matrices(a, b) => (read_matrix(&a)?, read_matrix(&b)?),
        OracleInput::Subsets(g, a, b) => {
            let g = read_graph(&g)?;
            let (x, y) = (read_points(&g, &a)?, read_points(&g, &b)?);
            (restrict_metric(&g, &x)?, restrict_metric(&g, &y)?)
        }
    };
    let sol = gh_exact(&dx, &dy, guard)?;
    Ok(json!({
        "command": "oracle",
        "sizes": [dx.len(), dy.len()],
        "search_size": tagged("search_size", search_size(dx.len(), dy.len())),
        "value": tagged("gh_exact", sol.value),
        "distortion": tagged("distortion", distortion(&sol.witness, &dx, &dy)?),
        "witness": sol.witness.pairs,
    }))
}

fn prepare_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::Output(format!("{}: {e}", dir.display())))
}

fn write_files(dir: &Path, files: Vec<(&str, Value)>) -> CliResult<Vec<String>> {
    prepare_dir(dir)?;
    let mut names = Vec::new();
    for (name, value) in files {
        write_json(&dir.join(name), &value)?;
        names.push(name.to_string());
    }
    Ok(names)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("fixture serializes")
}

pub fn construct_star(n: usize, dir: &Path) -> CliResult<Value> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("star needs --n >= 2, got {n}")).into());
    }
    let s = star_counterexample(n)?;
    let verification = json!({
        "n": n,
        "hausdorff_truncated": tagged("hausdorff_graph_to_region", s.hausdorff_truncated),
        "hausdorff_centered": tagged("hausdorff_graph_to_region", s.hausdorff_centered),
    });
    let files = write_files(
        dir,
        vec![
            ("star-tree.json", to_value(&encode_graph(&s.tree))),
            (
                "star-x.json",
                to_value(&encode_region(&s.tree, &s.truncated)),
            ),
            (
                "star-x-centered.json",
                to_value(&encode_region(&s.tree, &s.centered)),
            ),
            ("star-verification.json", verification.clone()),
        ],
    )?;
    Ok(
        json!({ "command": "construct", "name": "star", "files": files, "verification": verification }),
    )
}

pub fn construct_circle6(epsilon: f64, dir: &Path) -> CliResult<Value> {
    let s = circle_six_point(epsilon)?;
    let bound = circle_bound(&s.circle, &s.points)?;
    let verification = json!({
        "epsilon": tagged("circle_six_point", s.epsilon),
        "labels": s.labels.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "hausdorff": tagged("hausdorff_graph_to_set", s.hausdorff),
        "distortion": tagged("arc_correspondence_distortion", s.distortion),
        "gh_upper": tagged("arc_correspondence_distortion", 0.5 * s.distortion),
        "gh_lower": tagged("circle_bound", bound.value),
    });
    let files = write_files(
        dir,
        vec![
            ("circle6-graph.json", to_value(&encode_graph(&s.circle))),
            (
                "circle6-x.json",
                to_value(&encode_points(&s.circle, &s.points)),
            ),
            ("circle6-r.json", to_value(&encode_arcs(&s.correspondence))),
            ("circle6-verification.json", verification.clone()),
        ],
    )?;
    Ok(
        json!({ "command": "construct", "name": "circle6", "files": files, "verification": verification }),
    )
}

pub fn construct_net(graph: &Path, epsilon: f64, dir: &Path) -> CliResult<Value> {
    let g = read_graph(graph)?;
    let net = epsilon_net(&g, epsilon)?;
    let verification = json!({
        "epsilon": tagged("epsilon_net", epsilon),
        "points": net.len(),
        "hausdorff": tagged("hausdorff_graph_to_set", hausdorff_graph_to_set(&g, &net)?),
    });
    let files = write_files(
        dir,
        vec![
            ("net.json", to_value(&encode_points(&g, &net))),
            ("net-verification.json", verification.clone()),
        ],
    )?;
    Ok(
        json!({ "command": "construct", "name": "net", "files": files, "verification": verification }),
    )
}

fn random_point(rng: &mut ChaCha8Rng, g: &MetricGraph) -> GraphPoint {
    if g.edge_count() == 0 || rng.random_bool(0.25) {
        return GraphPoint::Vertex(VertexId(rng.random_range(0..g.vertex_count())));
    }
    let e = EdgeId(rng.random_range(0..g.edge_count()));
    let offset = rng.random_range(0.0..g.edge(e).length);
    GraphPoint::on_edge(g, e, offset).expect("offset drawn inside the edge")
}

fn random_subset(rng: &mut ChaCha8Rng, g: &MetricGraph, max: usize) -> CliResult<PointSet> {
    let k = rng.random_range(1..=max);
    Ok(PointSet::new(g, (0..k).map(|_| random_point(rng, g)))?)
}

struct Trial {
    hausdorff: f64,
    oracle: Option<f64>,
}

/// Trials whose `d_H(X, Y)` lies within 25% of `level`, and the smallest
/// oracle value and ratio among them.
fn level_summary(label: &str, level: f64, trials: &[Trial]) -> Value {
    let (lo, hi) = (0.75 * level, 1.25 * level);
    let hits: Vec<(f64, f64)> = trials
        .iter()
        .filter(|t| t.hausdorff >= lo && t.hausdorff <= hi)
        .filter_map(|t| t.oracle.map(|gh| (gh, gh / t.hausdorff)))
        .collect();
    let min = |f: fn(&(f64, f64)) -> f64| hits.iter().map(f).reduce(f64::min);
    json!({
        "label": label,
        "level": tagged("smallest_nonterminal_edge", level),
        "band": [round12(lo), round12(hi)],
        "trials": hits.len(),
        "min_gh": min(|h| h.0).map(|v| tagged("gh_exact", v)),
        "min_ratio": min(|h| h.1).map(|v| tagged("gh_exact/hausdorff_sets", v)),
    })
}

pub fn experiment_ratio(
    graph: &Path,
    samples: usize,
    density: f64,
    seed: u64,
    guard: f64,
) -> CliResult<Value> {
    if density.is_nan() || density <= 0.0 {
        return Err(
            Error::InvalidParameter(format!("--density must be positive, got {density}")).into(),
        );
    }
    let g = read_graph(graph)?;
    let max_size = ((density * g.total_length()).round() as usize).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(samples);
    let mut trials = Vec::with_capacity(samples);
    let mut violations = 0;
    for t in 0..samples {
        let x = random_subset(&mut rng, &g, max_size)?;
        let y = random_subset(&mut rng, &g, max_size)?;
        let dh = hausdorff_sets(&g, &x, &y)?;
        let certs = best_bound(&g, &x, Some(&y))?;
        let (diam, theorems): (Vec<_>, Vec<_>) = certs
            .iter()
            .partition(|c| c.theorem == Theorem::DiameterBound);
        let oracle = match gh_exact(&restrict_metric(&g, &x)?, &restrict_metric(&g, &y)?, guard) {
            Ok(sol) => Some(sol.value),
            Err(Error::GuardExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        if let Some(gh) = oracle {
            violations += certs
                .iter()
                .filter(|c| c.value > gh + metric_gh::TAU)
                .count();
        }
        rows.push(json!({
            "trial": t,
            "sizes": [x.len(), y.len()],
            "hausdorff": tagged("hausdorff_sets", dh),
            "diameter_bound": diam.first().map(|c| tagged("diameter_bound", c.value)),
            "certificates": theorems.iter().map(|c| json!({
                "theorem": c.theorem.tag(),
                "kind": c.kind.tag(),
                "value": tagged(c.theorem.tag(), c.value),
            })).collect::<Vec<_>>(),
            "oracle": match oracle {
                Some(v) => tagged("gh_exact", v),
                None => json!({ "op": "gh_exact", "status": "guard_exceeded" }),
            },
            "ratio": oracle.filter(|_| dh > 0.0).map(|v| tagged("gh_exact/hausdorff_sets", v / dh)),
        }));
        trials.push(Trial {
            hausdorff: dh,
            oracle,
        });
    }
    let levels = match g.smallest_nonterminal_edge().filter(|_| !g.is_tree()) {
        Some(e) => vec![
            level_summary("e/12", e / 12.0, &trials),
            level_summary("e/8", e / 8.0, &trials),
        ],
        None => Vec::new(),
    };
    Ok(json!({
        "command": "experiment ratio",
        "seed": seed,
        "samples": samples,
        "max_subset_size": max_size,
        "rows": rows,
        "summary": {
            "oracle_feasible": trials.iter().filter(|t| t.oracle.is_some()).count(),
            "bound_violations": violations,
            "levels": levels,
        },
    }))
}
