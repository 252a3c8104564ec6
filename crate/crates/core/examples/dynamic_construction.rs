//! Builds supervertices and superedges from feature clusters, then runs a
//! two-layer dynamic network.

use superhyper::linalg::{Activation, DenseMatrix};
use superhyper::shgnn::{dshgnn_forward, dynamic_construct, DynamicConfig, LayerParams};

fn main() -> superhyper::Result<()> {
    let x = DenseMatrix::from_rows(&[
        [0.0, 0.0],
        [0.0, 0.1],
        [5.0, 5.0],
        [5.0, 5.1],
        [10.0, 0.0],
        [10.1, 0.0],
    ])?;
    let cfg = DynamicConfig::new(3, 2, 11);
    let shg = dynamic_construct(&x, &cfg)?;
    for sv in shg.supervertices() {
        println!("supervertex {sv}");
    }
    for e in shg.superedges() {
        let members: Vec<String> = e.members.iter().map(|m| m.to_string()).collect();
        println!("superedge {}: {}", e.id, members.join(" "));
    }
    let layer = LayerParams::new(DenseMatrix::identity(2), Activation::Relu);
    let layers = [(cfg.clone(), layer.clone()), (DynamicConfig::new(3, 2, 13), layer)];
    println!("embeddings:\n{:?}", dshgnn_forward(&x, &layers)?.to_rows());
    Ok(())
}
