//! Builds the three-vertex SuperHyperGraph from a document and prints its
//! expansion.

use superhyper::io::parse_document;

fn main() -> superhyper::Result<()> {
    let text = include_str!("../data/worked_example.json");
    let doc = parse_document(text, true)?.document;
    let shg = doc.superhypergraph()?;
    for (v, sv) in shg.supervertices().iter().enumerate() {
        println!("supervertex {v}: {sv}");
    }
    let h = shg.expand();
    for (e, names) in h.edge_name_sets().iter().enumerate() {
        println!("expanded edge {e}: {{{}}}", names.join(","));
    }
    Ok(())
}
