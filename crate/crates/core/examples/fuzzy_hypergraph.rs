//! Height, c-cuts and the fuzzy Laplacian of a fuzzy hypergraph.

use superhyper::io::parse_document;
use superhyper::uncertain::{c_cut, fuzzy_laplacian, height};

fn main() -> superhyper::Result<()> {
    let doc = parse_document(include_str!("../data/fuzzy_hypergraph.json"), true)?.document;
    let fh = doc.fuzzy_hypergraph(true)?.expect("fuzzy block");
    println!("height = {}", height(&fh));
    for c in [0.25, 0.5, 1.0] {
        let cut = c_cut(&fh, c)?;
        println!("{c}-cut edges: {:?}", cut.edge_name_sets());
    }
    println!("laplacian:\n{:?}", fuzzy_laplacian(&fh).to_rows());
    Ok(())
}
