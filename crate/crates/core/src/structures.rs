//! Base vertices, nested supervertices/superedges and their expansion to
//! flat hypergraphs.
//!
//! A [`NestedElement`] is an element of the n-th iterated power set of the
//! base vertex set: either a leaf naming a base vertex or a finite set of
//! nested elements. A [`SuperHyperGraph`] of level `n` holds supervertices and
//! weighted superedges whose elements all have rank at most `n`.
//! [`SuperHyperGraph::expand`] flattens every superedge to the set of base
//! vertices reachable from it.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Named base vertex. Comparison is by name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseVertex(String);

impl BaseVertex {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::InvalidArgument(
                "base vertex name must be non-empty".into(),
            ));
        }
        Ok(BaseVertex(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for BaseVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Element of the n-th iterated power set over the base vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NestedElement {
    Leaf(BaseVertex),
    Set(Vec<NestedElement>),
}

impl NestedElement {
    /// Leaf shorthand; panics on an empty name.
    pub fn leaf(name: &str) -> Self {
        NestedElement::Leaf(BaseVertex::new(name).expect("non-empty leaf name"))
    }

    pub fn set(children: impl IntoIterator<Item = NestedElement>) -> Self {
        NestedElement::Set(children.into_iter().collect())
    }

    /// Set of leaves, e.g. `NestedElement::leaves(["x1", "x2"])` is `{x1, x2}`.
    pub fn leaves<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        NestedElement::Set(names.into_iter().map(NestedElement::leaf).collect())
    }

    /// 0 for a leaf, `1 + max child rank` for a set (the empty set has rank 1).
    pub fn rank(&self) -> usize {
        match self {
            NestedElement::Leaf(_) => 0,
            NestedElement::Set(children) => {
                1 + children.iter().map(NestedElement::rank).max().unwrap_or(0)
            }
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, NestedElement::Leaf(_))
    }

    /// Canonical form: children deduplicated and sorted by
    /// [`NestedElement::canonical_cmp`], recursively.
    pub fn canonicalize(&self) -> NestedElement {
        match self {
            NestedElement::Leaf(v) => NestedElement::Leaf(v.clone()),
            NestedElement::Set(children) => {
                let mut sorted: Vec<NestedElement> =
                    children.iter().map(NestedElement::canonicalize).collect();
                sorted.sort_by(NestedElement::canonical_cmp);
                sorted.dedup();
                NestedElement::Set(sorted)
            }
        }
    }

    /// Total order on canonical forms: leaves before sets, leaves by name
    /// bytes, sets by lexicographic comparison of their child sequences
    /// (a proper prefix sorts first).
    pub fn canonical_cmp(&self, other: &NestedElement) -> Ordering {
        match (self, other) {
            (NestedElement::Leaf(a), NestedElement::Leaf(b)) => {
                a.name().as_bytes().cmp(b.name().as_bytes())
            }
            (NestedElement::Leaf(_), NestedElement::Set(_)) => Ordering::Less,
            (NestedElement::Set(_), NestedElement::Leaf(_)) => Ordering::Greater,
            (NestedElement::Set(a), NestedElement::Set(b)) => {
                for (x, y) in a.iter().zip(b) {
                    match x.canonical_cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                a.len().cmp(&b.len())
            }
        }
    }

    /// Serialization of the canonical form: leaves as JSON strings, sets as
    /// JSON arrays of sorted child serializations.
    pub fn canonical_serialization(&self) -> String {
        self.canonicalize().serialize_canonical_form()
    }

    // Assumes `self` is already canonical.
    fn serialize_canonical_form(&self) -> String {
        match self {
            NestedElement::Leaf(v) => {
                serde_json::to_string(v.name()).expect("string serialization")
            }
            NestedElement::Set(children) => {
                let parts: Vec<String> = children
                    .iter()
                    .map(NestedElement::serialize_canonical_form)
                    .collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    /// Base vertices reachable from this element; `{v}` for a leaf `v`.
    pub fn expand(&self) -> BTreeSet<BaseVertex> {
        let mut out = BTreeSet::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut BTreeSet<BaseVertex>) {
        match self {
            NestedElement::Leaf(v) => {
                out.insert(v.clone());
            }
            NestedElement::Set(children) => {
                for c in children {
                    c.collect_leaves(out);
                }
            }
        }
    }

    fn for_each_leaf<'a>(&'a self, f: &mut dyn FnMut(&'a BaseVertex)) {
        match self {
            NestedElement::Leaf(v) => f(v),
            NestedElement::Set(children) => children.iter().for_each(|c| c.for_each_leaf(f)),
        }
    }

    fn visit_leaves<'a>(&'a self, path: &mut Vec<usize>, f: &mut dyn FnMut(&'a BaseVertex, &[usize])) {
        match self {
            NestedElement::Leaf(v) => f(v, path),
            NestedElement::Set(children) => {
                for (i, c) in children.iter().enumerate() {
                    path.push(i);
                    c.visit_leaves(path, f);
                    path.pop();
                }
            }
        }
    }
}

impl fmt::Display for NestedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NestedElement::Leaf(v) => f.write_str(v.name()),
            NestedElement::Set(children) => {
                f.write_str("{")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// Free-function form of [`NestedElement::canonicalize`].
pub fn canonicalize(e: &NestedElement) -> NestedElement {
    e.canonicalize()
}

/// Free-function form of [`NestedElement::expand`].
pub fn expand_element(e: &NestedElement) -> BTreeSet<BaseVertex> {
    e.expand()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Superedge {
    pub members: Vec<NestedElement>,
    pub weight: f64,
    pub id: u64,
}

impl Superedge {
    pub fn new(members: Vec<NestedElement>, weight: f64, id: u64) -> Self {
        Superedge {
            members,
            weight,
            id,
        }
    }

    /// Union of the expansions of all members.
    pub fn expand(&self) -> BTreeSet<BaseVertex> {
        let mut out = BTreeSet::new();
        for m in &self.members {
            m.collect_leaves(&mut out);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ViolationKind {
    UnknownLeaf(String),
    RankExceedsLevel { rank: usize, level: usize },
    NegativeWeight(f64),
    NonFiniteWeight,
    DuplicateBaseVertex(String),
    DuplicateSupervertex,
    DuplicateEdgeId(u64),
    /// Membership value or annotation constraint violated.
    Membership(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    /// JSON pointer into the graph document layout.
    pub path: String,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::UnknownLeaf(name) => {
                write!(f, "{}: leaf {name:?} is not a base vertex", self.path)
            }
            ViolationKind::RankExceedsLevel { rank, level } => {
                write!(f, "{}: element rank {rank} exceeds level {level}", self.path)
            }
            ViolationKind::NegativeWeight(w) => {
                write!(f, "{}: negative weight {w}", self.path)
            }
            ViolationKind::NonFiniteWeight => write!(f, "{}: non-finite weight", self.path),
            ViolationKind::DuplicateBaseVertex(name) => {
                write!(f, "{}: duplicate base vertex {name:?}", self.path)
            }
            ViolationKind::DuplicateSupervertex => {
                write!(f, "{}: duplicate supervertex", self.path)
            }
            ViolationKind::DuplicateEdgeId(id) => {
                write!(f, "{}: duplicate superedge id {id}", self.path)
            }
            ViolationKind::Membership(msg) => write!(f, "{}: {msg}", self.path),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, path: String, kind: ViolationKind) {
        self.violations.push(Violation { path, kind });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Supervertices and weighted superedges over nested elements of rank at most
/// `level`. Parallel superedges are kept apart by their ids.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperHyperGraph {
    base_vertices: Vec<BaseVertex>,
    level: usize,
    supervertices: Vec<NestedElement>,
    superedges: Vec<Superedge>,
}

impl SuperHyperGraph {
    /// Validates the parts, then stores every element in canonical form.
    pub fn new(
        base_vertices: Vec<BaseVertex>,
        level: usize,
        supervertices: Vec<NestedElement>,
        superedges: Vec<Superedge>,
    ) -> Result<Self> {
        let raw = SuperHyperGraph::new_unchecked(base_vertices, level, supervertices, superedges);
        let report = raw.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(raw.canonical())
    }

    /// Stores the parts as given, without validation or canonicalization.
    pub fn new_unchecked(
        base_vertices: Vec<BaseVertex>,
        level: usize,
        supervertices: Vec<NestedElement>,
        superedges: Vec<Superedge>,
    ) -> Self {
        SuperHyperGraph {
            base_vertices,
            level,
            supervertices,
            superedges,
        }
    }

    /// Level-`level` graph whose supervertices are the base vertices
    /// themselves (as leaves) and whose superedges are sets of those leaves.
    pub fn from_hypergraph(h: &Hypergraph, level: usize) -> Result<Self> {
        let supervertices = h
            .vertices()
            .iter()
            .map(|v| NestedElement::Leaf(v.clone()))
            .collect();
        let superedges = h
            .hyperedges()
            .iter()
            .map(|e| {
                Superedge::new(
                    e.members
                        .iter()
                        .map(|&i| NestedElement::Leaf(h.vertices()[i].clone()))
                        .collect(),
                    e.weight,
                    e.id,
                )
            })
            .collect();
        SuperHyperGraph::new(h.vertices().to_vec(), level, supervertices, superedges)
    }

    fn canonical(self) -> Self {
        SuperHyperGraph {
            base_vertices: self.base_vertices,
            level: self.level,
            supervertices: self
                .supervertices
                .iter()
                .map(NestedElement::canonicalize)
                .collect(),
            superedges: self
                .superedges
                .into_iter()
                .map(|e| {
                    let members = match NestedElement::Set(e.members).canonicalize() {
                        NestedElement::Set(m) => m,
                        NestedElement::Leaf(_) => unreachable!(),
                    };
                    Superedge::new(members, e.weight, e.id)
                })
                .collect(),
        }
    }

    pub fn base_vertices(&self) -> &[BaseVertex] {
        &self.base_vertices
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn supervertices(&self) -> &[NestedElement] {
        &self.supervertices
    }

    pub fn superedges(&self) -> &[Superedge] {
        &self.superedges
    }

    /// Lists every invariant violation; an empty report means the graph is
    /// valid.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut known = HashSet::new();
        for (i, v) in self.base_vertices.iter().enumerate() {
            if !known.insert(v.name()) {
                report.push(
                    format!("/base_vertices/{i}"),
                    ViolationKind::DuplicateBaseVertex(v.name().to_string()),
                );
            }
        }

        let check_element = |report: &mut ValidationReport, e: &NestedElement, prefix: String| {
            let rank = e.rank();
            if rank > self.level {
                report.push(
                    prefix.clone(),
                    ViolationKind::RankExceedsLevel {
                        rank,
                        level: self.level,
                    },
                );
            }
            let mut path = Vec::new();
            e.visit_leaves(&mut path, &mut |leaf, at| {
                if !known.contains(leaf.name()) {
                    let mut p = prefix.clone();
                    for i in at {
                        p.push_str(&format!("/{i}"));
                    }
                    report.push(p, ViolationKind::UnknownLeaf(leaf.name().to_string()));
                }
            });
        };

        let mut seen_sv = HashSet::new();
        for (i, sv) in self.supervertices.iter().enumerate() {
            check_element(&mut report, sv, format!("/supervertices/{i}"));
            if !seen_sv.insert(sv.canonical_serialization()) {
                report.push(format!("/supervertices/{i}"), ViolationKind::DuplicateSupervertex);
            }
        }

        let mut ids = HashSet::new();
        for (j, e) in self.superedges.iter().enumerate() {
            for (m, member) in e.members.iter().enumerate() {
                check_element(&mut report, member, format!("/superedges/{j}/members/{m}"));
            }
            if !e.weight.is_finite() {
                report.push(format!("/superedges/{j}/weight"), ViolationKind::NonFiniteWeight);
            } else if e.weight < 0.0 {
                report.push(
                    format!("/superedges/{j}/weight"),
                    ViolationKind::NegativeWeight(e.weight),
                );
            }
            if !ids.insert(e.id) {
                report.push(format!("/superedges/{j}/id"), ViolationKind::DuplicateEdgeId(e.id));
            }
        }
        report
    }

    /// Flat hypergraph on the base vertices: one hyperedge per superedge, in
    /// superedge order, with the same id and weight. Identical expansions are
    /// not merged.
    pub fn expand(&self) -> Hypergraph {
        let index: HashMap<&str, usize> = self
            .base_vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name(), i))
            .collect();
        let hyperedges = self
            .superedges
            .iter()
            .map(|e| {
                let mut members = Vec::new();
                for m in &e.members {
                    m.for_each_leaf(&mut |v| members.push(index[v.name()]));
                }
                members.sort_unstable();
                members.dedup();
                Hyperedge {
                    members,
                    weight: e.weight,
                    id: e.id,
                }
            })
            .collect();
        Hypergraph {
            vertices: self.base_vertices.clone(),
            hyperedges,
        }
    }

    /// Expansion built member-by-member through the recursive `Expand` of each
    /// superedge, for arbitrary level `n`. Produces the same hypergraph as
    /// [`SuperHyperGraph::expand`].
    pub fn expand_recursive(&self) -> Hypergraph {
        let index: HashMap<&str, usize> = self
            .base_vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name(), i))
            .collect();
        let hyperedges = self
            .superedges
            .iter()
            .map(|e| {
                let as_set = NestedElement::Set(e.members.clone());
                let mut seen = vec![false; self.base_vertices.len()];
                let mut stack = vec![&as_set];
                while let Some(node) = stack.pop() {
                    match node {
                        NestedElement::Leaf(v) => seen[index[v.name()]] = true,
                        NestedElement::Set(children) => stack.extend(children.iter()),
                    }
                }
                Hyperedge {
                    members: (0..seen.len()).filter(|&i| seen[i]).collect(),
                    weight: e.weight,
                    id: e.id,
                }
            })
            .collect();
        Hypergraph {
            vertices: self.base_vertices.clone(),
            hyperedges,
        }
    }

    /// Index of `element` among the supervertices, compared in canonical form.
    pub fn supervertex_index(&self, element: &NestedElement) -> Option<usize> {
        let key = element.canonical_serialization();
        self.supervertices
            .iter()
            .position(|sv| sv.canonical_serialization() == key)
    }
}

/// Free-function form of [`SuperHyperGraph::expand`].
pub fn expand(shg: &SuperHyperGraph) -> Hypergraph {
    shg.expand()
}

/// Free-function form of [`SuperHyperGraph::validate`].
pub fn validate(shg: &SuperHyperGraph) -> ValidationReport {
    shg.validate()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Hyperedge {
    /// Sorted, duplicate-free vertex indices.
    pub members: Vec<usize>,
    pub weight: f64,
    pub id: u64,
}

/// Flat hypergraph over named vertices. Hyperedges may be empty.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypergraph {
    vertices: Vec<BaseVertex>,
    hyperedges: Vec<Hyperedge>,
}

impl Hypergraph {
    /// Builds a hypergraph from vertex indices. Members are sorted and
    /// deduplicated; ids default to the edge position.
    pub fn new(vertices: Vec<BaseVertex>, edges: Vec<(Vec<usize>, f64)>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(j, (m, w))| Hyperedge {
                members: m,
                weight: w,
                id: j as u64,
            })
            .collect();
        Hypergraph::with_edges(vertices, edges)
    }

    pub fn with_edges(vertices: Vec<BaseVertex>, mut hyperedges: Vec<Hyperedge>) -> Result<Self> {
        let mut names = HashSet::new();
        for v in &vertices {
            if !names.insert(v.name()) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate vertex {:?}",
                    v.name()
                )));
            }
        }
        for (j, e) in hyperedges.iter_mut().enumerate() {
            e.members.sort_unstable();
            e.members.dedup();
            if let Some(&bad) = e.members.iter().find(|&&i| i >= vertices.len()) {
                return Err(Error::InvalidArgument(format!(
                    "hyperedge {j} references vertex index {bad} out of {}",
                    vertices.len()
                )));
            }
            if !e.weight.is_finite() || e.weight < 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "hyperedge {j} has invalid weight {}",
                    e.weight
                )));
            }
        }
        Ok(Hypergraph {
            vertices,
            hyperedges,
        })
    }

    /// Vertices named `v0..v{n-1}`.
    pub fn with_indexed_vertices(n: usize, edges: Vec<(Vec<usize>, f64)>) -> Result<Self> {
        let vertices = (0..n)
            .map(|i| BaseVertex::new(format!("v{i}")).expect("non-empty"))
            .collect();
        Hypergraph::new(vertices, edges)
    }

    /// Builds from vertex names and edges given as name lists.
    pub fn from_names(vertices: &[&str], edges: &[(&[&str], f64)]) -> Result<Self> {
        let vs: Vec<BaseVertex> = vertices
            .iter()
            .map(|n| BaseVertex::new(*n))
            .collect::<Result<_>>()?;
        let index: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let mut es = Vec::with_capacity(edges.len());
        for (members, w) in edges {
            let mut idx = Vec::with_capacity(members.len());
            for m in members.iter() {
                idx.push(*index.get(m).ok_or_else(|| {
                    Error::InvalidArgument(format!("unknown vertex {m:?}"))
                })?);
            }
            es.push((idx, *w));
        }
        Hypergraph::new(vs, es)
    }

    pub fn vertices(&self) -> &[BaseVertex] {
        &self.vertices
    }

    pub fn hyperedges(&self) -> &[Hyperedge] {
        &self.hyperedges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name() == name)
    }

    /// Edge member sets as sorted name lists, in edge order.
    pub fn edge_name_sets(&self) -> Vec<Vec<&str>> {
        self.hyperedges
            .iter()
            .map(|e| e.members.iter().map(|&i| self.vertices[i].name()).collect())
            .collect()
    }

    /// Number of incidences (non-zeros of the incidence matrix).
    pub fn nnz(&self) -> usize {
        self.hyperedges.iter().map(|e| e.members.len()).sum()
    }

    /// Same structure with every weight replaced by `f(weight)`.
    pub fn map_weights(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        let edges = self
            .hyperedges
            .iter()
            .map(|e| Hyperedge {
                members: e.members.clone(),
                weight: f(e.weight),
                id: e.id,
            })
            .collect();
        Hypergraph::with_edges(self.vertices.clone(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(n: &str) -> NestedElement {
        NestedElement::leaf(n)
    }

    pub(crate) fn worked_example() -> SuperHyperGraph {
        let base = ["x1", "x2", "x3"]
            .iter()
            .map(|n| BaseVertex::new(*n).unwrap())
            .collect();
        let sv = vec![
            NestedElement::leaves(["x1", "x2"]),
            NestedElement::leaves(["x3"]),
            NestedElement::leaves(["x1"]),
        ];
        let se = vec![
            Superedge::new(
                vec![NestedElement::leaves(["x1", "x2"]), NestedElement::leaves(["x3"])],
                1.0,
                0,
            ),
            Superedge::new(
                vec![NestedElement::leaves(["x1"]), NestedElement::leaves(["x3"])],
                1.0,
                1,
            ),
        ];
        SuperHyperGraph::new(base, 1, sv, se).unwrap()
    }

    #[test]
    fn canonicalize_leaf_is_identity() {
        assert_eq!(leaf("x1").canonicalize(), leaf("x1"));
    }

    #[test]
    fn canonicalize_dedupes_and_sorts() {
        let e = NestedElement::set([leaf("x2"), leaf("x1"), leaf("x1")]);
        assert_eq!(e.canonicalize(), NestedElement::set([leaf("x1"), leaf("x2")]));
    }

    #[test]
    fn canonicalize_sorts_recursively() {
        let e = NestedElement::set([
            NestedElement::leaves(["x2", "x1"]),
            NestedElement::leaves(["x1"]),
        ]);
        // A proper prefix sorts first.
        let expected = NestedElement::set([
            NestedElement::leaves(["x1"]),
            NestedElement::leaves(["x1", "x2"]),
        ]);
        assert_eq!(e.canonicalize(), expected);
        assert_eq!(e.canonical_serialization(), r#"[["x1"],["x1","x2"]]"#);
    }

    #[test]
    fn ranks() {
        assert_eq!(leaf("a").rank(), 0);
        assert_eq!(NestedElement::set([]).rank(), 1);
        assert_eq!(NestedElement::leaves(["a"]).rank(), 1);
        assert_eq!(NestedElement::set([NestedElement::leaves(["a"]), leaf("b")]).rank(), 2);
    }

    #[test]
    fn expand_element_cases() {
        let names = |s: BTreeSet<BaseVertex>| s.into_iter().map(|v| v.0).collect::<Vec<_>>();
        assert_eq!(names(expand_element(&leaf("x1"))), vec!["x1"]);
        let e = NestedElement::set([
            NestedElement::leaves(["x1", "x2"]),
            NestedElement::leaves(["x3"]),
        ]);
        assert_eq!(names(expand_element(&e)), vec!["x1", "x2", "x3"]);
        assert!(expand_element(&NestedElement::set([])).is_empty());
    }

    #[test]
    fn worked_example_expands() {
        let h = worked_example().expand();
        assert_eq!(h.edge_name_sets(), vec![vec!["x1", "x2", "x3"], vec!["x1", "x3"]]);
        assert_eq!(worked_example().expand_recursive(), h);
        assert!(worked_example().validate().is_valid());
    }

    #[test]
    fn level_two_edge_expands() {
        let base = ["x1", "x2", "x3"].iter().map(|n| BaseVertex::new(*n).unwrap()).collect();
        let member_a = NestedElement::set([NestedElement::leaves(["x1"]), NestedElement::leaves(["x2"])]);
        let member_b = NestedElement::set([NestedElement::leaves(["x3"])]);
        let shg = SuperHyperGraph::new(
            base,
            2,
            vec![member_a.clone(), member_b.clone()],
            vec![Superedge::new(vec![member_a, member_b], 1.0, 0)],
        )
        .unwrap();
        assert_eq!(shg.expand().edge_name_sets(), vec![vec!["x1", "x2", "x3"]]);
        assert_eq!(shg.expand_recursive(), shg.expand());
    }

    #[test]
    fn parallel_superedges_kept() {
        let base: Vec<_> = ["a", "b"].iter().map(|n| BaseVertex::new(*n).unwrap()).collect();
        let e = || vec![NestedElement::leaves(["a", "b"])];
        let shg = SuperHyperGraph::new(
            base,
            1,
            vec![NestedElement::leaves(["a", "b"])],
            vec![Superedge::new(e(), 1.0, 7), Superedge::new(e(), 2.0, 9)],
        )
        .unwrap();
        let h = shg.expand();
        assert_eq!(h.num_edges(), 2);
        assert_eq!(h.hyperedges()[0].id, 7);
        assert_eq!(h.hyperedges()[1].weight, 2.0);
    }

    #[test]
    fn validation_flags_rank_and_weight() {
        let base: Vec<_> = ["a", "b"].iter().map(|n| BaseVertex::new(*n).unwrap()).collect();
        let deep = NestedElement::set([NestedElement::leaves(["a"])]);
        let shg = SuperHyperGraph::new_unchecked(base.clone(), 1, vec![deep], vec![]);
        let r = shg.validate();
        assert_eq!(r.len(), 1);
        assert!(matches!(r.violations[0].kind, ViolationKind::RankExceedsLevel { rank: 2, level: 1 }));

        let shg = SuperHyperGraph::new_unchecked(
            base,
            1,
            vec![],
            vec![Superedge::new(vec![NestedElement::leaves(["a"])], -1.0, 0)],
        );
        let r = shg.validate();
        assert_eq!(r.len(), 1);
        assert!(matches!(r.violations[0].kind, ViolationKind::NegativeWeight(_)));
        assert_eq!(r.violations[0].path, "/superedges/0/weight");
    }

    #[test]
    fn validation_points_at_unknown_leaf() {
        let base: Vec<_> = ["x1"].iter().map(|n| BaseVertex::new(*n).unwrap()).collect();
        let shg = SuperHyperGraph::new_unchecked(
            base,
            1,
            vec![],
            vec![Superedge::new(vec![NestedElement::leaves(["x1"]), leaf("x9")], 1.0, 0)],
        );
        let r = shg.validate();
        assert_eq!(r.len(), 1);
        assert_eq!(r.violations[0].path, "/superedges/0/members/1");
        assert!(SuperHyperGraph::new(
            shg.base_vertices().to_vec(),
            1,
            vec![],
            shg.superedges().to_vec()
        )
        .is_err());
    }

    #[test]
    fn singleton_supervertices_reduce_to_hypergraph() {
        let h = Hypergraph::from_names(&["a", "b", "c"], &[(&["a", "b"], 1.0), (&["c", "b", "a"], 0.5)])
            .unwrap();
        let shg = SuperHyperGraph::from_hypergraph(&h, 1).unwrap();
        assert_eq!(shg.expand(), h);
    }

    #[test]
    fn empty_superedge_expands_to_empty_hyperedge() {
        let base: Vec<_> = ["a"].iter().map(|n| BaseVertex::new(*n).unwrap()).collect();
        let shg = SuperHyperGraph::new(base, 1, vec![], vec![Superedge::new(vec![], 1.0, 0)]).unwrap();
        assert!(shg.expand().hyperedges()[0].members.is_empty());
    }
}
