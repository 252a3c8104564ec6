use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::json::{pointer_segment, to_json_string};
use crate::error::{Error, Result};
use crate::structures::{BaseVertex, Hypergraph, NestedElement, SuperHyperGraph, Superedge};
use crate::uncertain::{
    AnnotatedGraph, Annotations, EdgeContradiction, FuzzyEdge, FuzzyHypergraph, FuzzyMembership,
    NeutrosophicTriplet, PartitionKind, PartitionedMembership, PlithogenicContext, PlithogenicEdge,
    PlithogenicVertex,
};

pub const FORMAT_VERSION: u32 = 1;

/// A nested element: a string is a leaf, an array is a set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementDoc {
    Leaf(String),
    Set(Vec<ElementDoc>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuperedgeDoc {
    pub members: Vec<ElementDoc>,
    pub weight: f64,
    pub id: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeContradictionDoc {
    /// Attribute value names of the first endpoint pair.
    pub first: [String; 2],
    pub second: [String; 2],
    pub values: Vec<f64>,
}

/// Vertex entries are keyed by base vertex name and edge entries by
/// superedge id.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnotationsDoc {
    pub kind: String,
    pub vertices: BTreeMap<String, Value>,
    pub edges: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attribute_values: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contradiction: Option<Vec<Vec<Vec<f64>>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edge_contradictions: Vec<EdgeContradictionDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzyEdgeDoc {
    pub membership: BTreeMap<String, f64>,
    pub weight: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzyHypergraphDoc {
    pub edges: Vec<FuzzyEdgeDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format_version: u32,
    pub base_vertices: Vec<String>,
    pub level: usize,
    #[serde(default)]
    pub supervertices: Vec<ElementDoc>,
    #[serde(default)]
    pub superedges: Vec<SuperedgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annotations: Option<AnnotationsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fuzzy_hypergraph: Option<FuzzyHypergraphDoc>,
}

/// A parsed and validated document with any unknown-field warnings.
#[derive(Clone, Debug, PartialEq)]
pub struct Loaded {
    pub document: GraphDocument,
    pub warnings: Vec<String>,
}

fn doc_err(pointer: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::Document {
        pointer: pointer.into(),
        msg: msg.into(),
    }
}

fn element_doc(e: &NestedElement) -> ElementDoc {
    match e {
        NestedElement::Leaf(v) => ElementDoc::Leaf(v.name().to_string()),
        NestedElement::Set(c) => ElementDoc::Set(c.iter().map(element_doc).collect()),
    }
}

fn element(e: &ElementDoc, pointer: &str) -> Result<NestedElement> {
    match e {
        ElementDoc::Leaf(name) => BaseVertex::new(name.as_str())
            .map(NestedElement::Leaf)
            .map_err(|_| doc_err(pointer, "empty vertex name")),
        ElementDoc::Set(children) => Ok(NestedElement::Set(
            children
                .iter()
                .enumerate()
                .map(|(i, c)| element(c, &format!("{pointer}/{i}")))
                .collect::<Result<_>>()?,
        )),
    }
}

fn real(v: &Value, pointer: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| doc_err(pointer, "expected a number"))
}

fn reals(v: &Value, pointer: &str) -> Result<Vec<f64>> {
    let arr = v.as_array().ok_or_else(|| doc_err(pointer, "expected an array of numbers"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| real(x, &format!("{pointer}/{i}")))
        .collect()
}

fn field<'a>(v: &'a Value, key: &str, pointer: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| doc_err(pointer, format!("missing field {key:?}")))
}

fn partition_kind(name: &str) -> Option<PartitionKind> {
    match name {
        "intuitionistic" => Some(PartitionKind::Intuitionistic),
        "quadripartitioned" => Some(PartitionKind::Quadripartitioned),
        "pentapartitioned" => Some(PartitionKind::Pentapartitioned),
        "hesitant" => Some(PartitionKind::Hesitant),
        _ => None,
    }
}

const ROOT_FIELDS: &[&str] = &[
    "format_version",
    "base_vertices",
    "level",
    "supervertices",
    "superedges",
    "annotations",
    "fuzzy_hypergraph",
];
const SUPEREDGE_FIELDS: &[&str] = &["members", "weight", "id"];
const ANNOTATION_FIELDS: &[&str] = &[
    "kind",
    "vertices",
    "edges",
    "attribute_values",
    "contradiction",
    "edge_contradictions",
];
const EDGE_CONTRADICTION_FIELDS: &[&str] = &["first", "second", "values"];
const PLITHOGENIC_VERTEX_FIELDS: &[&str] = &["attribute", "daf"];
const PLITHOGENIC_EDGE_FIELDS: &[&str] = &["daf"];
const FUZZY_FIELDS: &[&str] = &["edges"];
const FUZZY_EDGE_FIELDS: &[&str] = &["membership", "weight"];

fn unknown_in(v: &Value, known: &[&str], pointer: &str, out: &mut Vec<String>) {
    if let Some(obj) = v.as_object() {
        for key in obj.keys() {
            if !known.contains(&key.as_str()) {
                out.push(format!("{pointer}/{}", pointer_segment(key)));
            }
        }
    }
}

fn each_item(v: Option<&Value>, known: &[&str], pointer: &str, out: &mut Vec<String>) {
    if let Some(arr) = v.and_then(Value::as_array) {
        for (i, item) in arr.iter().enumerate() {
            unknown_in(item, known, &format!("{pointer}/{i}"), out);
        }
    }
}

fn each_value(v: Option<&Value>, known: &[&str], pointer: &str, out: &mut Vec<String>) {
    if let Some(obj) = v.and_then(Value::as_object) {
        for (k, item) in obj {
            unknown_in(item, known, &format!("{pointer}/{}", pointer_segment(k)), out);
        }
    }
}

/// JSON pointers of every field the format does not define.
fn unknown_fields(root: &Value) -> Vec<String> {
    let mut out = Vec::new();
    unknown_in(root, ROOT_FIELDS, "", &mut out);
    each_item(root.get("superedges"), SUPEREDGE_FIELDS, "/superedges", &mut out);
    if let Some(a) = root.get("annotations") {
        unknown_in(a, ANNOTATION_FIELDS, "/annotations", &mut out);
        each_item(
            a.get("edge_contradictions"),
            EDGE_CONTRADICTION_FIELDS,
            "/annotations/edge_contradictions",
            &mut out,
        );
        if a.get("kind").and_then(Value::as_str) == Some("plithogenic") {
            each_value(a.get("vertices"), PLITHOGENIC_VERTEX_FIELDS, "/annotations/vertices", &mut out);
            each_value(a.get("edges"), PLITHOGENIC_EDGE_FIELDS, "/annotations/edges", &mut out);
        }
    }
    if let Some(f) = root.get("fuzzy_hypergraph") {
        unknown_in(f, FUZZY_FIELDS, "/fuzzy_hypergraph", &mut out);
        each_item(f.get("edges"), FUZZY_EDGE_FIELDS, "/fuzzy_hypergraph/edges", &mut out);
    }
    out
}

fn path_pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut p = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => p.push_str(&format!("/{index}")),
            Segment::Map { key } => p.push_str(&format!("/{}", pointer_segment(key))),
            Segment::Enum { variant } => p.push_str(&format!("/{}", pointer_segment(variant))),
            Segment::Unknown => {}
        }
    }
    p
}

/// Parses and fully validates a document. Unknown fields are errors when
/// `strict` and warnings otherwise; `strict` also enables the strict
/// membership checks.
pub fn parse_document(text: &str, strict: bool) -> Result<Loaded> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let unknown = unknown_fields(&value);
    if strict {
        if let Some(p) = unknown.first() {
            return Err(doc_err(p.clone(), "unknown field"));
        }
    }
    let warnings = unknown.into_iter().map(|p| format!("{p}: unknown field ignored")).collect();
    let mut de = serde_json::Deserializer::from_str(text);
    let document: GraphDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let pointer = path_pointer(e.path());
        doc_err(pointer, e.into_inner().to_string())
    })?;
    if document.format_version != FORMAT_VERSION {
        return Err(doc_err(
            "/format_version",
            format!("unsupported version {}, expected {FORMAT_VERSION}", document.format_version),
        ));
    }
    document.superhypergraph()?;
    document.annotated_graph(strict)?;
    document.fuzzy_hypergraph(strict)?;
    Ok(Loaded { document, warnings })
}

pub fn load(path: impl AsRef<Path>, strict: bool) -> Result<Loaded> {
    parse_document(&std::fs::read_to_string(path)?, strict)
}

pub fn save(doc: &GraphDocument, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, doc.to_json())?;
    Ok(())
}

impl GraphDocument {
    pub fn from_superhypergraph(shg: &SuperHyperGraph) -> Self {
        GraphDocument {
            format_version: FORMAT_VERSION,
            base_vertices: shg.base_vertices().iter().map(|v| v.name().to_string()).collect(),
            level: shg.level(),
            supervertices: shg.supervertices().iter().map(element_doc).collect(),
            superedges: shg
                .superedges()
                .iter()
                .map(|e| SuperedgeDoc {
                    members: e.members.iter().map(element_doc).collect(),
                    weight: e.weight,
                    id: e.id,
                })
                .collect(),
            annotations: None,
            fuzzy_hypergraph: None,
        }
    }

    /// Level-1 document whose supervertices are the vertices of `h`.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        Ok(GraphDocument::from_superhypergraph(&SuperHyperGraph::from_hypergraph(h, 1)?))
    }

    /// Document carrying the graph of `g` with its annotations.
    pub fn from_annotated(g: &AnnotatedGraph) -> Result<Self> {
        let mut doc = GraphDocument::from_hypergraph(g.graph())?;
        doc.annotations = Some(annotations_doc(g));
        Ok(doc)
    }

    /// Document holding only a fuzzy hypergraph over its vertices.
    pub fn from_fuzzy_hypergraph(fh: &FuzzyHypergraph) -> Self {
        let names: Vec<String> = fh.vertices().iter().map(|v| v.name().to_string()).collect();
        GraphDocument {
            format_version: FORMAT_VERSION,
            base_vertices: names.clone(),
            level: 1,
            supervertices: names.iter().cloned().map(ElementDoc::Leaf).collect(),
            superedges: Vec::new(),
            annotations: None,
            fuzzy_hypergraph: Some(FuzzyHypergraphDoc {
                edges: fh
                    .edges()
                    .iter()
                    .map(|e| FuzzyEdgeDoc {
                        membership: e.membership.iter().map(|&(i, m)| (names[i].clone(), m)).collect(),
                        weight: e.weight,
                    })
                    .collect(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        to_json_string(self)
    }

    fn base(&self) -> Result<Vec<BaseVertex>> {
        self.base_vertices
            .iter()
            .enumerate()
            .map(|(i, name)| {
                BaseVertex::new(name.as_str()).map_err(|_| doc_err(format!("/base_vertices/{i}"), "empty vertex name"))
            })
            .collect()
    }

    /// The validated graph; violations carry JSON pointers into this
    /// document.
    pub fn superhypergraph(&self) -> Result<SuperHyperGraph> {
        let supervertices = self
            .supervertices
            .iter()
            .enumerate()
            .map(|(i, e)| element(e, &format!("/supervertices/{i}")))
            .collect::<Result<_>>()?;
        let superedges = self
            .superedges
            .iter()
            .enumerate()
            .map(|(j, e)| {
                let members = e
                    .members
                    .iter()
                    .enumerate()
                    .map(|(m, x)| element(x, &format!("/superedges/{j}/members/{m}")))
                    .collect::<Result<_>>()?;
                Ok(Superedge::new(members, e.weight, e.id))
            })
            .collect::<Result<_>>()?;
        SuperHyperGraph::new(self.base()?, self.level, supervertices, superedges)
    }

    /// The expanded hypergraph on the base vertices.
    pub fn hypergraph(&self) -> Result<Hypergraph> {
        Ok(self.superhypergraph()?.expand())
    }

    /// Annotated graph over the expansion, if the document has annotations.
    pub fn annotated_graph(&self, strict: bool) -> Result<Option<AnnotatedGraph>> {
        let Some(a) = &self.annotations else {
            return Ok(None);
        };
        let graph = self.hypergraph()?;
        for (key, ptr) in a
            .vertices
            .keys()
            .map(|k| (k, "/annotations/vertices"))
            .chain(a.edges.keys().map(|k| (k, "/annotations/edges")))
        {
            let known = if ptr.ends_with("vertices") {
                graph.vertex_index(key).is_some()
            } else {
                graph.hyperedges().iter().any(|e| e.id.to_string() == *key)
            };
            if !known {
                return Err(doc_err(format!("{ptr}/{}", pointer_segment(key)), "no such vertex or edge"));
            }
        }
        let vertex_entries = graph
            .vertices()
            .iter()
            .map(|v| {
                let ptr = format!("/annotations/vertices/{}", pointer_segment(v.name()));
                a.vertices
                    .get(v.name())
                    .map(|x| (x, ptr))
                    .ok_or_else(|| doc_err("/annotations/vertices", format!("missing entry for vertex {:?}", v.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        let edge_entries = graph
            .hyperedges()
            .iter()
            .map(|e| {
                let key = e.id.to_string();
                let ptr = format!("/annotations/edges/{key}");
                a.edges
                    .get(&key)
                    .map(|x| (x, ptr))
                    .ok_or_else(|| doc_err("/annotations/edges", format!("missing entry for edge {key}")))
            })
            .collect::<Result<Vec<_>>>()?;

        let annotations = match a.kind.as_str() {
            "fuzzy" => {
                let f = |(x, p): &(&Value, String)| real(x, p).map(|mu| FuzzyMembership { mu });
                Annotations::Fuzzy {
                    vertices: vertex_entries.iter().map(f).collect::<Result<_>>()?,
                    edges: edge_entries.iter().map(f).collect::<Result<_>>()?,
                }
            }
            "neutrosophic" => {
                let f = |(x, p): &(&Value, String)| {
                    let v = reals(x, p)?;
                    match v[..] {
                        [t, i, f] => Ok(NeutrosophicTriplet { t, i, f }),
                        _ => Err(doc_err(p.clone(), format!("expected [t, i, f], got {} values", v.len()))),
                    }
                };
                Annotations::Neutrosophic {
                    vertices: vertex_entries.iter().map(f).collect::<Result<_>>()?,
                    edges: edge_entries.iter().map(f).collect::<Result<_>>()?,
                }
            }
            "plithogenic" => {
                let attribute_values = a
                    .attribute_values
                    .clone()
                    .ok_or_else(|| doc_err("/annotations", "missing field \"attribute_values\""))?;
                let contradiction = a
                    .contradiction
                    .clone()
                    .ok_or_else(|| doc_err("/annotations", "missing field \"contradiction\""))?;
                let attr = |name: &str, p: &str| {
                    attribute_values
                        .iter()
                        .position(|a| a == name)
                        .ok_or_else(|| doc_err(p, format!("unknown attribute value {name:?}")))
                };
                let mut context = PlithogenicContext::new(attribute_values.clone(), contradiction);
                for (k, ec) in a.edge_contradictions.iter().enumerate() {
                    let p = format!("/annotations/edge_contradictions/{k}");
                    context.edge_contradictions.push(EdgeContradiction {
                        first: (attr(&ec.first[0], &p)?, attr(&ec.first[1], &p)?),
                        second: (attr(&ec.second[0], &p)?, attr(&ec.second[1], &p)?),
                        values: ec.values.clone(),
                    });
                }
                let vertices = vertex_entries
                    .iter()
                    .map(|(x, p)| {
                        let name = field(x, "attribute", p)?
                            .as_str()
                            .ok_or_else(|| doc_err(format!("{p}/attribute"), "expected a string"))?;
                        Ok(PlithogenicVertex {
                            attribute: attr(name, &format!("{p}/attribute"))?,
                            daf: reals(field(x, "daf", p)?, &format!("{p}/daf"))?,
                        })
                    })
                    .collect::<Result<_>>()?;
                let edges = edge_entries
                    .iter()
                    .map(|(x, p)| {
                        Ok(PlithogenicEdge {
                            daf: reals(field(x, "daf", p)?, &format!("{p}/daf"))?,
                        })
                    })
                    .collect::<Result<_>>()?;
                Annotations::Plithogenic {
                    context,
                    vertices,
                    edges,
                }
            }
            other => {
                let kind = partition_kind(other)
                    .ok_or_else(|| doc_err("/annotations/kind", format!("unknown annotation kind {other:?}")))?;
                let f = |(x, p): &(&Value, String)| {
                    let mut values = reals(x, p)?;
                    if kind == PartitionKind::Hesitant {
                        values.sort_by(f64::total_cmp);
                        values.dedup();
                    }
                    Ok(PartitionedMembership { kind, values })
                };
                Annotations::Partitioned {
                    kind,
                    vertices: vertex_entries.iter().map(f).collect::<Result<_>>()?,
                    edges: edge_entries.iter().map(f).collect::<Result<_>>()?,
                }
            }
        };
        let g = AnnotatedGraph::new(graph, annotations).map_err(|e| doc_err("/annotations", e.to_string()))?;
        let report = g.validate(strict);
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(Some(g))
    }

    /// Fuzzy hypergraph over the base vertices, if present.
    pub fn fuzzy_hypergraph(&self, strict: bool) -> Result<Option<FuzzyHypergraph>> {
        let Some(f) = &self.fuzzy_hypergraph else {
            return Ok(None);
        };
        let base = self.base()?;
        let mut edges = Vec::with_capacity(f.edges.len());
        for (j, e) in f.edges.iter().enumerate() {
            let p = format!("/fuzzy_hypergraph/edges/{j}");
            if !e.weight.is_finite() || e.weight < 0.0 {
                return Err(doc_err(format!("{p}/weight"), format!("invalid weight {}", e.weight)));
            }
            let mut membership = Vec::with_capacity(e.membership.len());
            for (name, &mu) in &e.membership {
                let mp = format!("{p}/membership/{}", pointer_segment(name));
                let i = self
                    .base_vertices
                    .iter()
                    .position(|b| b == name)
                    .ok_or_else(|| doc_err(mp.clone(), format!("{name:?} is not a base vertex")))?;
                if !(0.0..=1.0).contains(&mu) {
                    return Err(doc_err(mp, format!("membership {mu} outside [0,1]")));
                }
                membership.push((i, mu));
            }
            edges.push(FuzzyEdge {
                membership,
                weight: e.weight,
            });
        }
        let fh = FuzzyHypergraph::new(base, edges).map_err(|e| doc_err("/fuzzy_hypergraph", e.to_string()))?;
        let report = fh.validate(strict);
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(Some(fh))
    }
}

fn annotations_doc(g: &AnnotatedGraph) -> AnnotationsDoc {
    let names: Vec<String> = g.graph().vertices().iter().map(|v| v.name().to_string()).collect();
    let ids: Vec<String> = g.graph().hyperedges().iter().map(|e| e.id.to_string()).collect();
    let keyed = |keys: &[String], values: Vec<Value>| keys.iter().cloned().zip(values).collect();
    let nums = |v: &[f64]| Value::from(v.to_vec());
    let mut doc = AnnotationsDoc {
        kind: g.annotations().kind_name().to_string(),
        vertices: BTreeMap::new(),
        edges: BTreeMap::new(),
        attribute_values: None,
        contradiction: None,
        edge_contradictions: Vec::new(),
    };
    match g.annotations() {
        Annotations::Fuzzy { vertices, edges } => {
            doc.vertices = keyed(&names, vertices.iter().map(|m| Value::from(m.mu)).collect());
            doc.edges = keyed(&ids, edges.iter().map(|m| Value::from(m.mu)).collect());
        }
        Annotations::Neutrosophic { vertices, edges } => {
            let f = |m: &NeutrosophicTriplet| nums(&[m.t, m.i, m.f]);
            doc.vertices = keyed(&names, vertices.iter().map(f).collect());
            doc.edges = keyed(&ids, edges.iter().map(f).collect());
        }
        Annotations::Partitioned { vertices, edges, .. } => {
            doc.vertices = keyed(&names, vertices.iter().map(|m| nums(&m.values)).collect());
            doc.edges = keyed(&ids, edges.iter().map(|m| nums(&m.values)).collect());
        }
        Annotations::Plithogenic {
            context,
            vertices,
            edges,
        } => {
            let attr = |i: usize| context.attribute_values[i].clone();
            doc.vertices = keyed(
                &names,
                vertices
                    .iter()
                    .map(|v| serde_json::json!({"attribute": attr(v.attribute), "daf": v.daf}))
                    .collect(),
            );
            doc.edges = keyed(&ids, edges.iter().map(|e| serde_json::json!({"daf": e.daf})).collect());
            doc.attribute_values = Some(context.attribute_values.clone());
            doc.contradiction = Some(context.contradiction.clone());
            doc.edge_contradictions = context
                .edge_contradictions
                .iter()
                .map(|ec| EdgeContradictionDoc {
                    first: [attr(ec.first.0), attr(ec.first.1)],
                    second: [attr(ec.second.0), attr(ec.second.1)],
                    values: ec.values.clone(),
                })
                .collect();
        }
    }
    doc
}
