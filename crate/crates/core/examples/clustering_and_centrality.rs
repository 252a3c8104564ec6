//! Spectral normalized-cut clustering and degree centrality.

use superhyper::io::parse_document;
use superhyper::partition::{degree_centrality, ncut_spectral, ncut_value, weighted_cut, Partition};

fn main() -> superhyper::Result<()> {
    let doc = parse_document(include_str!("../data/clustering_example.json"), true)?.document;
    let shg = doc.superhypergraph()?;
    let h = shg.expand();

    let given = Partition::new(vec![0, 0, 0, 1, 1], 2, 1.0)?;
    println!("inter-cluster weight of {{A,B,C}} | {{D,E}}: {}", weighted_cut(&h, &given)?);

    let spectral = ncut_spectral(&h, 2, 5)?;
    println!(
        "spectral clusters {:?}, ncut {:.4}",
        spectral.parts(),
        ncut_value(&h, &spectral)?
    );
    for (v, c) in shg.base_vertices().iter().zip(degree_centrality(&shg)) {
        println!("centrality {} = {c}", v.name());
    }
    Ok(())
}
