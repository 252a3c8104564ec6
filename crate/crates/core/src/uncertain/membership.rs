//! Membership annotations for uncertain graphs and their validators.

use crate::error::{Error, Result};
use crate::structures::{Hypergraph, ValidationReport, Violation, ViolationKind};

fn in_unit(x: f64) -> bool {
    (0.0..=1.0).contains(&x)
}

/// Fuzzy membership degree `μ ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FuzzyMembership {
    pub mu: f64,
}

impl FuzzyMembership {
    pub fn new(mu: f64) -> Result<Self> {
        let m = FuzzyMembership { mu };
        match m.problems().first() {
            Some(p) => Err(Error::InvalidArgument(p.clone())),
            None => Ok(m),
        }
    }

    fn problems(&self) -> Vec<String> {
        if in_unit(self.mu) {
            Vec::new()
        } else {
            vec![format!("membership {} outside [0,1]", self.mu)]
        }
    }
}

/// Neutrosophic truth, indeterminacy and falsity degrees.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeutrosophicTriplet {
    pub t: f64,
    pub i: f64,
    pub f: f64,
}

impl NeutrosophicTriplet {
    pub fn new(t: f64, i: f64, f: f64) -> Result<Self> {
        let m = NeutrosophicTriplet { t, i, f };
        match m.problems().first() {
            Some(p) => Err(Error::InvalidArgument(p.clone())),
            None => Ok(m),
        }
    }

    fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, v) in [("t", self.t), ("i", self.i), ("f", self.f)] {
            if !in_unit(v) {
                out.push(format!("{name} = {v} outside [0,1]"));
            }
        }
        let sum = self.t + self.i + self.f;
        if sum > 3.0 {
            out.push(format!("t+i+f = {sum} exceeds 3"));
        }
        out
    }

    /// Scalar grade `t·(1−i)·(1−f)`.
    pub fn grade(&self) -> f64 {
        self.t * (1.0 - self.i) * (1.0 - self.f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    /// `(μ, ν)` with `μ + ν ≤ 1`.
    Intuitionistic,
    Quadripartitioned,
    Pentapartitioned,
    /// Finite set of degrees in `[0, 1]`.
    Hesitant,
}

impl PartitionKind {
    pub fn arity(self) -> Option<usize> {
        match self {
            PartitionKind::Intuitionistic => Some(2),
            PartitionKind::Quadripartitioned => Some(4),
            PartitionKind::Pentapartitioned => Some(5),
            PartitionKind::Hesitant => None,
        }
    }

    fn sum_bound(self) -> Option<f64> {
        match self {
            PartitionKind::Intuitionistic => Some(1.0),
            PartitionKind::Quadripartitioned => Some(4.0),
            PartitionKind::Pentapartitioned => Some(5.0),
            PartitionKind::Hesitant => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionedMembership {
    pub kind: PartitionKind,
    /// For hesitant sets: sorted ascending, without duplicates.
    pub values: Vec<f64>,
}

impl PartitionedMembership {
    pub fn new(kind: PartitionKind, values: Vec<f64>) -> Result<Self> {
        let mut m = PartitionedMembership { kind, values };
        if kind == PartitionKind::Hesitant {
            m.values.sort_by(f64::total_cmp);
            m.values.dedup();
        }
        match m.problems().first() {
            Some(p) => Err(Error::InvalidArgument(p.clone())),
            None => Ok(m),
        }
    }

    fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(k) = self.kind.arity() {
            if self.values.len() != k {
                out.push(format!("{:?} membership needs {k} values, got {}", self.kind, self.values.len()));
            }
        }
        for (c, &v) in self.values.iter().enumerate() {
            if !in_unit(v) {
                out.push(format!("component {} = {v} outside [0,1]", c + 1));
            }
        }
        if self.kind == PartitionKind::Hesitant && self.values.windows(2).any(|w| w[0] >= w[1]) {
            out.push("hesitant set is not strictly increasing".into());
        }
        if let Some(bound) = self.kind.sum_bound() {
            let sum: f64 = self.values.iter().sum();
            if sum > bound {
                out.push(format!("component sum {sum} exceeds {bound}"));
            }
        }
        out
    }
}

/// Graph-level plithogenic data: the attribute value range and the
/// contradiction function between attribute values.
#[derive(Clone, Debug, PartialEq)]
pub struct PlithogenicContext {
    pub attribute_values: Vec<String>,
    /// `contradiction[a][b]` is a `t`-vector in `[0,1]^t`.
    pub contradiction: Vec<Vec<Vec<f64>>>,
    /// Optional edge contradictions `bCf((a,b),(c,d))`, checked in strict mode.
    pub edge_contradictions: Vec<EdgeContradiction>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeContradiction {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub values: Vec<f64>,
}

impl PlithogenicContext {
    pub fn new(attribute_values: Vec<String>, contradiction: Vec<Vec<Vec<f64>>>) -> Self {
        PlithogenicContext {
            attribute_values,
            contradiction,
            edge_contradictions: Vec::new(),
        }
    }

    /// Context with a single attribute value and a zero contradiction table.
    pub fn trivial(t: usize) -> Self {
        PlithogenicContext::new(vec!["a".into()], vec![vec![vec![0.0; t]]])
    }

    pub fn contradiction_arity(&self) -> usize {
        self.contradiction
            .first()
            .and_then(|row| row.first())
            .map_or(0, Vec::len)
    }

    /// Mean contradiction between two attribute values.
    pub fn mean_contradiction(&self, a: usize, b: usize) -> f64 {
        let v = &self.contradiction[a][b];
        if v.is_empty() {
            0.0
        } else {
            v.iter().sum::<f64>() / v.len() as f64
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlithogenicVertex {
    /// Index into [`PlithogenicContext::attribute_values`].
    pub attribute: usize,
    pub daf: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlithogenicEdge {
    pub daf: Vec<f64>,
}

/// Scalar appurtenance grade `daf₀ · Π_{j≥1} (1 − daf_j)`. Coincides with the
/// neutrosophic grade on `(t, i, f)`-shaped vectors.
pub fn appurtenance_grade(daf: &[f64]) -> f64 {
    match daf.split_first() {
        None => 0.0,
        Some((&first, rest)) => rest.iter().fold(first, |g, &v| g * (1.0 - v)),
    }
}

/// Per-vertex and per-edge annotations of a single membership kind.
#[derive(Clone, Debug, PartialEq)]
pub enum Annotations {
    Fuzzy {
        vertices: Vec<FuzzyMembership>,
        edges: Vec<FuzzyMembership>,
    },
    Neutrosophic {
        vertices: Vec<NeutrosophicTriplet>,
        edges: Vec<NeutrosophicTriplet>,
    },
    Partitioned {
        kind: PartitionKind,
        vertices: Vec<PartitionedMembership>,
        edges: Vec<PartitionedMembership>,
    },
    Plithogenic {
        context: PlithogenicContext,
        vertices: Vec<PlithogenicVertex>,
        edges: Vec<PlithogenicEdge>,
    },
}

impl Annotations {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Annotations::Fuzzy { .. } => "fuzzy",
            Annotations::Neutrosophic { .. } => "neutrosophic",
            Annotations::Partitioned { kind, .. } => match kind {
                PartitionKind::Intuitionistic => "intuitionistic",
                PartitionKind::Quadripartitioned => "quadripartitioned",
                PartitionKind::Pentapartitioned => "pentapartitioned",
                PartitionKind::Hesitant => "hesitant",
            },
            Annotations::Plithogenic { .. } => "plithogenic",
        }
    }

    fn counts(&self) -> (usize, usize) {
        match self {
            Annotations::Fuzzy { vertices, edges } => (vertices.len(), edges.len()),
            Annotations::Neutrosophic { vertices, edges } => (vertices.len(), edges.len()),
            Annotations::Partitioned { vertices, edges, .. } => (vertices.len(), edges.len()),
            Annotations::Plithogenic { vertices, edges, .. } => (vertices.len(), edges.len()),
        }
    }
}

/// A simple graph (every edge has exactly two distinct endpoints) with
/// uniform-kind annotations on vertices and edges.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnotatedGraph {
    graph: Hypergraph,
    annotations: Annotations,
}

impl AnnotatedGraph {
    pub fn new(graph: Hypergraph, annotations: Annotations) -> Result<Self> {
        for (j, e) in graph.hyperedges().iter().enumerate() {
            if e.members.len() != 2 {
                return Err(Error::InvalidArgument(format!(
                    "edge {j} has {} distinct endpoints; annotated graphs need exactly 2",
                    e.members.len()
                )));
            }
        }
        let (nv, ne) = annotations.counts();
        if nv != graph.num_vertices() || ne != graph.num_edges() {
            return Err(Error::shape(
                "AnnotatedGraph",
                format!(
                    "{nv} vertex and {ne} edge annotations for {} vertices and {} edges",
                    graph.num_vertices(),
                    graph.num_edges()
                ),
            ));
        }
        if let Annotations::Plithogenic { context, vertices, .. } = &annotations {
            let a = context.attribute_values.len();
            if context.contradiction.len() != a || context.contradiction.iter().any(|r| r.len() != a) {
                return Err(Error::shape(
                    "AnnotatedGraph",
                    format!("contradiction table must be {a}x{a}"),
                ));
            }
            if let Some(i) = vertices.iter().position(|v| v.attribute >= a) {
                return Err(Error::InvalidArgument(format!(
                    "vertex {i} has attribute index {} but only {a} attribute values exist",
                    vertices[i].attribute
                )));
            }
        }
        Ok(AnnotatedGraph { graph, annotations })
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn annotations(&self) -> &Annotations {
        &self.annotations
    }

    /// Endpoints of edge `j`.
    pub fn endpoints(&self, j: usize) -> (usize, usize) {
        let m = &self.graph.hyperedges()[j].members;
        (m[0], m[1])
    }

    /// Checks value ranges and sum bounds; with `strict`, also the
    /// edge-versus-endpoint inequalities of the quadripartitioned,
    /// pentapartitioned and plithogenic models.
    pub fn validate(&self, strict: bool) -> ValidationReport {
        let mut violations = Vec::new();
        let mut push = |path: String, msg: String| {
            violations.push(Violation {
                path,
                kind: ViolationKind::Membership(msg),
            })
        };
        let vpath = |i: usize| format!("/annotations/vertices/{}", self.graph.vertices()[i].name());
        let epath = |j: usize| format!("/annotations/edges/{j}");
        match &self.annotations {
            Annotations::Fuzzy { vertices, edges } => {
                report_all(vertices.iter().map(FuzzyMembership::problems), &vpath, &mut push);
                report_all(edges.iter().map(FuzzyMembership::problems), &epath, &mut push);
            }
            Annotations::Neutrosophic { vertices, edges } => {
                report_all(vertices.iter().map(NeutrosophicTriplet::problems), &vpath, &mut push);
                report_all(edges.iter().map(NeutrosophicTriplet::problems), &epath, &mut push);
            }
            Annotations::Partitioned { kind, vertices, edges } => {
                let wrong_kind = |m: &PartitionedMembership| {
                    let mut p = m.problems();
                    if m.kind != *kind {
                        p.push(format!("{:?} membership in a {:?} graph", m.kind, kind));
                    }
                    p
                };
                report_all(vertices.iter().map(wrong_kind), &vpath, &mut push);
                report_all(edges.iter().map(wrong_kind), &epath, &mut push);
                if strict {
                    for (j, e) in edges.iter().enumerate() {
                        let (u, v) = self.endpoints(j);
                        for msg in partition_edge_constraints(*kind, &e.values, &vertices[u].values, &vertices[v].values) {
                            push(epath(j), msg);
                        }
                    }
                }
            }
            Annotations::Plithogenic { context, vertices, edges } => {
                for msg in context_problems(context) {
                    push("/annotations/contradiction".into(), msg);
                }
                let s = vertices.first().map(|v| v.daf.len()).or(edges.first().map(|e| e.daf.len()));
                let daf_problems = |daf: &[f64]| {
                    let mut p: Vec<String> = daf
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !in_unit(**v))
                        .map(|(c, v)| format!("daf component {c} = {v} outside [0,1]"))
                        .collect();
                    if Some(daf.len()) != s {
                        p.push(format!("daf length {} differs from {}", daf.len(), s.unwrap_or(0)));
                    }
                    p
                };
                report_all(vertices.iter().map(|v| daf_problems(&v.daf)), &vpath, &mut push);
                report_all(edges.iter().map(|e| daf_problems(&e.daf)), &epath, &mut push);
                if strict {
                    for (j, e) in edges.iter().enumerate() {
                        let (u, v) = self.endpoints(j);
                        for (c, &b) in e.daf.iter().enumerate() {
                            let bound = vertices[u].daf.get(c).copied().unwrap_or(0.0).min(vertices[v].daf.get(c).copied().unwrap_or(0.0));
                            if b > bound {
                                push(epath(j), format!("bdf component {c} = {b} exceeds min adf {bound}"));
                            }
                        }
                    }
                    for (k, ec) in context.edge_contradictions.iter().enumerate() {
                        for msg in edge_contradiction_problems(context, ec) {
                            push(format!("/annotations/edge_contradictions/{k}"), msg);
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

fn report_all(
    problems: impl Iterator<Item = Vec<String>>,
    path: &dyn Fn(usize) -> String,
    push: &mut dyn FnMut(String, String),
) {
    for (i, list) in problems.enumerate() {
        for msg in list {
            push(path(i), msg);
        }
    }
}

fn partition_edge_constraints(kind: PartitionKind, e: &[f64], u: &[f64], v: &[f64]) -> Vec<String> {
    let rules: &[(usize, Ineq)] = match kind {
        PartitionKind::Quadripartitioned => &[(0, Ineq::LeMin), (1, Ineq::LeMin), (2, Ineq::LeMax), (3, Ineq::LeMax)],
        PartitionKind::Pentapartitioned => &[
            (0, Ineq::LeMin),
            (1, Ineq::LeMin),
            (2, Ineq::GeMax),
            (3, Ineq::GeMax),
            (4, Ineq::GeMax),
        ],
        PartitionKind::Intuitionistic | PartitionKind::Hesitant => &[],
    };
    let mut out = Vec::new();
    for &(c, ineq) in rules {
        let (Some(&x), Some(&a), Some(&b)) = (e.get(c), u.get(c), v.get(c)) else {
            continue;
        };
        let n = c + 1;
        match ineq {
            Ineq::LeMin if x > a.min(b) => out.push(format!("sigma{n}(e) = {x} exceeds min {}", a.min(b))),
            Ineq::LeMax if x > a.max(b) => out.push(format!("sigma{n}(e) = {x} exceeds max {}", a.max(b))),
            Ineq::GeMax if x < a.max(b) => out.push(format!("sigma{n}(e) = {x} is below max {}", a.max(b))),
            _ => {}
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Ineq {
    LeMin,
    LeMax,
    GeMax,
}

fn context_problems(ctx: &PlithogenicContext) -> Vec<String> {
    let mut out = Vec::new();
    let t = ctx.contradiction_arity();
    for (a, row) in ctx.contradiction.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            if v.len() != t {
                out.push(format!("contradiction ({a},{b}) has length {} instead of {t}", v.len()));
            }
            if v.iter().any(|x| !in_unit(*x)) {
                out.push(format!("contradiction ({a},{b}) outside [0,1]"));
            }
            if a == b && v.iter().any(|x| *x != 0.0) {
                out.push(format!("contradiction ({a},{a}) must be 0"));
            }
            if a < b && ctx.contradiction.get(b).and_then(|r| r.get(a)) != Some(v) {
                out.push(format!("contradiction ({a},{b}) is not symmetric"));
            }
        }
    }
    out
}

fn edge_contradiction_problems(ctx: &PlithogenicContext, ec: &EdgeContradiction) -> Vec<String> {
    let n = ctx.attribute_values.len();
    let ((a, b), (c, d)) = (ec.first, ec.second);
    if [a, b, c, d].iter().any(|&x| x >= n) {
        return vec!["attribute index out of range".into()];
    }
    let mut out = Vec::new();
    if ec.first == ec.second && ec.values.iter().any(|x| *x != 0.0) {
        out.push("edge contradiction of a pair with itself must be 0".into());
    }
    for (k, &x) in ec.values.iter().enumerate() {
        let bound = ctx.contradiction[a][c].get(k).copied().unwrap_or(0.0).min(ctx.contradiction[b][d].get(k).copied().unwrap_or(0.0));
        if !in_unit(x) {
            out.push(format!("component {k} = {x} outside [0,1]"));
        } else if x > bound {
            out.push(format!("bCf component {k} = {x} exceeds min aCf {bound}"));
        }
    }
    out
}
