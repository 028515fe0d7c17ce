//! Exact Hausdorff distances on compact metric graphs and certified
//! Gromov–Hausdorff bounds between a metric graph and its samples.
//!
//! The crate is organised bottom-up:
//!
//! - [`metric_graph`]: the ambient graph, points on it, thickenings and loops.
//! - [`hausdorff`]: exact directed/symmetric Hausdorff distances, including
//!   the continuum-to-sample case.
//! - [`gh_oracle`]: brute-force Gromov–Hausdorff distance between small finite
//!   metric spaces, the ground truth for everything else.
//! - [`gh_bounds`]: lower bounds and exact values packaged as
//!   [`BoundCertificate`]s.
//! - [`constructions`]: extremal examples and ε-nets used as fixtures.
//!
//! Data-parallel loops go through [`Execution`]; with the `parallel` feature
//! disabled every call runs sequentially.

#![forbid(unsafe_code)]
// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constructions;
pub mod error;
pub mod exec;
pub mod gh_bounds;
pub mod gh_oracle;
pub mod hausdorff;
pub mod metric_graph;

pub use error::{Error, Result};
pub use exec::Execution;
pub use gh_bounds::{BoundCertificate, BoundKind, Hypothesis, Relation, Target, Theorem};
pub use gh_oracle::{Correspondence, FiniteMetricSpace, GhSolution};
pub use metric_graph::{
    EdgeId, EdgeIntervalSet, GraphBuilder, GraphPoint, MetricGraph, PointSet, SimpleLoop, VertexId,
};

/// Global comparison tolerance for hypothesis checks and metric validation.
pub const TAU: f64 = 1e-9;
