mod common;

use proptest::prelude::*;
use superhyper::io::{load, parse_document, save, GraphDocument};
use superhyper::structures::{BaseVertex, NestedElement, SuperHyperGraph, Superedge};
use superhyper::Error;

fn element() -> impl Strategy<Value = NestedElement> {
    let leaf = prop::sample::select(vec!["v0", "v1", "v2", "v3"]).prop_map(NestedElement::leaf);
    leaf.prop_recursive(2, 12, 3, |inner| prop::collection::vec(inner, 0..3).prop_map(NestedElement::set))
}

fn graph() -> impl Strategy<Value = SuperHyperGraph> {
    (
        prop::collection::vec(element(), 0..4),
        prop::collection::vec((prop::collection::vec(element(), 0..3), 0.0f64..1e6), 0..4),
    )
        .prop_map(|(sv, edges)| {
            let mut supervertices: Vec<NestedElement> = Vec::new();
            for e in sv.iter().map(NestedElement::canonicalize) {
                if !supervertices.contains(&e) {
                    supervertices.push(e);
                }
            }
            let superedges: Vec<Superedge> = edges
                .into_iter()
                .enumerate()
                .map(|(j, (m, w))| Superedge::new(m, w, j as u64))
                .collect();
            let level = supervertices
                .iter()
                .chain(superedges.iter().flat_map(|e| e.members.iter()))
                .map(NestedElement::rank)
                .max()
                .unwrap_or(0);
            let base = (0..4).map(|i| BaseVertex::new(format!("v{i}")).unwrap()).collect();
            SuperHyperGraph::new(base, level, supervertices, superedges).unwrap()
        })
}

proptest! {
    #[test]
    fn save_then_load_is_identity(shg in graph()) {
        let text = GraphDocument::from_superhypergraph(&shg).to_json();
        let loaded = parse_document(&text, true).unwrap();
        prop_assert!(loaded.warnings.is_empty());
        prop_assert_eq!(loaded.document.superhypergraph().unwrap(), shg);
        prop_assert_eq!(loaded.document.to_json(), text);
    }
}

#[test]
fn worked_example_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let first = load(common::data_path("worked_example.json"), true).unwrap().document;
    save(&first, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let again = load(&path, true).unwrap().document;
    assert_eq!(again.superhypergraph().unwrap(), common::worked_example());
    save(&again, &path).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn annotated_and_fuzzy_documents_round_trip() {
    for name in ["fuzzy_path.json", "neutrosophic_path.json", "plithogenic_path.json"] {
        let doc = load(common::data_path(name), true).unwrap().document;
        let g = doc.annotated_graph(true).unwrap().unwrap();
        let text = GraphDocument::from_annotated(&g).unwrap().to_json();
        let back = parse_document(&text, true).unwrap().document.annotated_graph(true).unwrap().unwrap();
        assert_eq!(back, g, "{name}");
    }
    let doc = load(common::data_path("fuzzy_hypergraph.json"), true).unwrap().document;
    let fh = doc.fuzzy_hypergraph(true).unwrap().unwrap();
    let text = GraphDocument::from_fuzzy_hypergraph(&fh).to_json();
    let back = parse_document(&text, true).unwrap().document.fuzzy_hypergraph(true).unwrap().unwrap();
    assert_eq!(back, fh);
}

const UNKNOWN_LEAF: &str = r#"{"format_version": 1, "base_vertices": ["x1", "x2"], "level": 1,
  "supervertices": [], "superedges": [{"members": ["x1", "x9"], "weight": 1, "id": 0}]}"#;

#[test]
fn unknown_leaf_is_reported_by_pointer() {
    match parse_document(UNKNOWN_LEAF, true) {
        Err(Error::Invalid(report)) => assert_eq!(report.violations[0].path, "/superedges/0/members/1"),
        Err(Error::Document { pointer, .. }) => assert_eq!(pointer, "/superedges/0/members/1"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn rank_above_level_is_rejected() {
    let text = r#"{"format_version": 1, "base_vertices": ["x1"], "level": 1,
      "supervertices": [[["x1"]]], "superedges": []}"#;
    match parse_document(text, true) {
        Err(Error::Invalid(report)) => {
            assert_eq!(report.violations.len(), 1);
            assert_eq!(report.violations[0].path, "/supervertices/0");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn parse_errors_carry_position() {
    match parse_document("{\n  \"format_version\": 1,\n  oops\n}", false) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_fields_warn_or_fail() {
    let text = r#"{"format_version": 1, "base_vertices": [], "level": 0, "supervertices": [], "superedges": [], "colour": 3}"#;
    let loaded = parse_document(text, false).unwrap();
    assert_eq!(loaded.warnings, ["/colour: unknown field ignored"]);
    match parse_document(text, true) {
        Err(Error::Document { pointer, .. }) => assert_eq!(pointer, "/colour"),
        other => panic!("{other:?}"),
    }
}
