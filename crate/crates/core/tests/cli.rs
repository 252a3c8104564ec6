mod common;

use common::cli::{all_subcommands, run};
use common::data_path;

#[test]
fn every_subcommand_succeeds() {
    let names: Vec<String> = all_subcommands().iter().map(|a| a[0].clone()).collect();
    assert_eq!(names.len(), 20);
    for args in all_subcommands() {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out, err) = run(&argv);
        assert_eq!(code, 0, "{argv:?}: {err}");
        assert!(!out.is_empty(), "{argv:?}");
    }
}

#[test]
fn expand_prints_the_flat_edges() {
    let (code, out, _) = run(&["expand", &data_path("worked_example.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let edges: Vec<serde_json::Value> = v["superedges"].as_array().unwrap().iter().map(|e| e["members"].clone()).collect();
    assert_eq!(edges, [serde_json::json!(["x1", "x2", "x3"]), serde_json::json!(["x1", "x3"])]);
}

#[test]
fn zero_step_walk_prints_the_start() {
    let (code, out, _) = run(&["walk", &data_path("worked_example.json"), "--start", "x2", "--steps", "0", "--seed", "1"]);
    assert_eq!((code, out.as_str()), (0, "x2\n"));
}

#[test]
fn partition_is_repeatable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let h = common::random_hypergraph(&mut common::rng(4), 12, 10, 4);
    superhyper::io::save(&superhyper::io::GraphDocument::from_hypergraph(&h).unwrap(), &path).unwrap();
    let g = path.to_str().unwrap();
    let args = ["partition", g, "-k", "3", "-c", "1.0", "--seed", "7"];
    let first = run(&args);
    assert_eq!(first.0, 0, "{}", first.2);
    assert!(first.1.starts_with("vertex,part\n"));
    assert_eq!(run(&args), first);
}

#[test]
fn randomized_commands_require_a_seed() {
    let g = data_path("worked_example.json");
    for args in [
        vec!["walk", &g, "--start", "x1", "--steps", "3"],
        vec!["partition", &g, "-k", "2"],
        vec!["cluster", &g, "-k", "2"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.starts_with("error[usage]:") && err.contains("--seed"), "{err}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["expand"]).0, 2);
    let (code, _, err) = run(&["expand", "/nonexistent/g.json"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[io]:"), "{err}");
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"format_version": 1, "base_vertices": ["a"], "level": 0, "supervertices": ["b"], "superedges": []}"#).unwrap();
    let (code, _, err) = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(err.lines().count(), 1, "{err}");
    let (code, _, err) = run(&["ffree", &data_path("worked_example.json"), &data_path("triangle.json")]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn strict_mode_rejects_unknown_fields() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    std::fs::write(&g, r#"{"format_version": 1, "base_vertices": ["a"], "level": 0, "supervertices": ["a"], "superedges": [], "extra": 1}"#).unwrap();
    let g = g.to_str().unwrap();
    let (code, _, err) = run(&["validate", g]);
    assert_eq!(code, 0);
    assert!(err.contains("/extra"), "{err}");
    let (code, _, err) = run(&["--strict", "validate", g]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[document]:"), "{err}");
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pi.csv");
    let (code, out, _) = run(&["--out", path.to_str().unwrap(), "stationary", "--matrix", &data_path("weather.csv")]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("state,probability"));
    let pi0: f64 = lines.next().unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((pi0 - 5.0 / 6.0).abs() <= 1e-10);
}

#[test]
fn bdtree_and_turan_outputs() {
    let (code, out, _) = run(&["bdtree", "--table", &data_path("and_table.json"), "--evaluate", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1");
    let (code, out, _) = run(&["turan", "-n", "4", "-r", "2", "--complete", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ex"], 4);
}
