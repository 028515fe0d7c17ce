//! File formats: graphs, point sets, matrices, regions and arc
//! correspondences, all JSON.
//!
//! Real numbers are written with 12 significant digits. On input, a number
//! may also be one of the strings `"pi"`, `"2pi"`, `"pi/3"`, `"pi/6"`.

use std::f64::consts::PI;
use std::fs;
use std::path::Path;

use metric_gh::constructions::ArcCorrespondence;
use metric_gh::{
    EdgeId, EdgeIntervalSet, FiniteMetricSpace, GraphBuilder, GraphPoint, MetricGraph, PointSet,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

const PI_TOKENS: [(&str, f64); 4] = [
    ("pi", PI),
    ("2pi", 2.0 * PI),
    ("pi/3", PI / 3.0),
    ("pi/6", PI / 6.0),
];

/// A real that may be spelled as a π token.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Real {
    Number(f64),
    Token(String),
}

impl Real {
    pub fn value(&self) -> CliResult<f64> {
        match self {
            Real::Number(v) => Ok(*v),
            Real::Token(t) => PI_TOKENS
                .iter()
                .find(|(name, _)| name == t)
                .map(|&(_, v)| v)
                .ok_or_else(|| CliError::Parse(format!("unknown number token {t:?}"))),
        }
    }

    /// The π token when `v` is exactly one, otherwise the rounded number.
    pub fn encode(v: f64) -> Self {
        match PI_TOKENS.iter().find(|&&(_, t)| t == v) {
            Some(&(name, _)) => Real::Token(name.to_string()),
            None => Real::Number(round12(v)),
        }
    }
}

/// Rounds to 12 significant digits.
pub fn round12(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{v:.11e}").parse().expect("formatted float parses")
}

#[derive(Debug, Deserialize, Serialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct EdgeEntry {
    pub id: String,
    pub u: String,
    pub v: String,
    pub length: Real,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum PointEntry {
    Vertex { vertex: String },
    Edge { edge: String, offset: Real },
}

#[derive(Debug, Deserialize, Serialize)]
pub struct MatrixFile {
    pub n: usize,
    pub d: Vec<Real>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct ArcEntry {
    pub arc: [Real; 2],
    pub point: usize,
}

/// Open intervals per edge plus included vertices.
#[derive(Debug, Deserialize, Serialize)]
pub struct RegionFile {
    pub vertices: Vec<String>,
    pub intervals: Vec<IntervalEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct IntervalEntry {
    pub edge: String,
    pub lo: Real,
    pub hi: Real,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let text = to_pretty(value);
    fs::write(path, text).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

pub fn read_graph(path: &Path) -> CliResult<MetricGraph> {
    let file: GraphFile = read_json(path)?;
    let mut b = GraphBuilder::new().vertices(file.vertices);
    for e in file.edges {
        b = b.edge(e.id, e.u, e.v, e.length.value()?);
    }
    Ok(b.build()?)
}

pub fn encode_graph(g: &MetricGraph) -> GraphFile {
    GraphFile {
        vertices: g.vertex_names().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeEntry {
                id: e.name.clone(),
                u: g.vertex_name(e.u).to_string(),
                v: g.vertex_name(e.v).to_string(),
                length: Real::encode(e.length),
            })
            .collect(),
    }
}

fn edge_named(g: &MetricGraph, name: &str) -> CliResult<EdgeId> {
    g.edge_by_name(name)
        .ok_or_else(|| metric_gh::Error::PointNotOnGraph(format!("unknown edge {name:?}")).into())
}

fn vertex_named(g: &MetricGraph, name: &str) -> CliResult<metric_gh::VertexId> {
    g.vertex_by_name(name)
        .ok_or_else(|| metric_gh::Error::PointNotOnGraph(format!("unknown vertex {name:?}")).into())
}

pub fn read_points(g: &MetricGraph, path: &Path) -> CliResult<PointSet> {
    let entries: Vec<PointEntry> = read_json(path)?;
    let mut points = Vec::with_capacity(entries.len());
    for entry in entries {
        points.push(match entry {
            PointEntry::Vertex { vertex } => GraphPoint::Vertex(vertex_named(g, &vertex)?),
            PointEntry::Edge { edge, offset } => {
                GraphPoint::on_edge(g, edge_named(g, &edge)?, offset.value()?)?
            }
        });
    }
    Ok(PointSet::new(g, points)?)
}

pub fn encode_points(g: &MetricGraph, set: &PointSet) -> Vec<PointEntry> {
    set.points()
        .iter()
        .map(|p| match *p {
            GraphPoint::Vertex(v) => PointEntry::Vertex {
                vertex: g.vertex_name(v).to_string(),
            },
            GraphPoint::Edge { edge, offset } => PointEntry::Edge {
                edge: g.edge(edge).name.clone(),
                offset: Real::encode(offset),
            },
        })
        .collect()
}

pub fn read_matrix(path: &Path) -> CliResult<FiniteMetricSpace> {
    let file: MatrixFile = read_json(path)?;
    let d = file
        .d
        .iter()
        .map(Real::value)
        .collect::<CliResult<Vec<f64>>>()?;
    Ok(FiniteMetricSpace::new(file.n, d)?)
}

pub fn encode_region(g: &MetricGraph, region: &EdgeIntervalSet) -> RegionFile {
    RegionFile {
        vertices: region
            .included_vertices()
            .map(|v| g.vertex_name(v).to_string())
            .collect(),
        intervals: g
            .edge_ids()
            .flat_map(|e| {
                region
                    .intervals(e)
                    .iter()
                    .map(move |&(lo, hi)| IntervalEntry {
                        edge: g.edge(e).name.clone(),
                        lo: Real::encode(lo),
                        hi: Real::encode(hi),
                    })
            })
            .collect(),
    }
}

pub fn encode_arcs(r: &ArcCorrespondence) -> Vec<ArcEntry> {
    r.assignments
        .iter()
        .map(|&((lo, hi), point)| ArcEntry {
            arc: [Real::encode(lo), Real::encode(hi)],
            point,
        })
        .collect()
}

/// `{"op": ..., "value": ...}` with the value rounded to 12 significant digits.
pub fn tagged(op: &str, value: f64) -> Value {
    serde_json::json!({ "op": op, "value": round12(value) })
}
