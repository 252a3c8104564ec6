//! Laplacian spectrum and a two-layer convolution network on the example graph.

use superhyper::io::parse_document;
use superhyper::linalg::eigen::symmetric_eigenvalues;
use superhyper::linalg::{normalized_laplacian, Activation, DenseMatrix};
use superhyper::shgnn::{forward, shgnn_convolve, LayerParams, NetworkConfig, Readout};

fn main() -> superhyper::Result<()> {
    let shg = parse_document(include_str!("../data/worked_example.json"), true)?
        .document
        .superhypergraph()?;
    let lap = normalized_laplacian(&shg.expand());
    println!("laplacian eigenvalues: {:?}", symmetric_eigenvalues(&lap)?);

    let x = DenseMatrix::from_rows(&[[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])?;
    let theta = DenseMatrix::from_rows(&[[1.0, 0.5], [-0.5, 1.0]])?;
    let layer = LayerParams::new(theta, Activation::Relu);
    println!("one layer:\n{:?}", shgnn_convolve(&shg, &x, &layer)?.to_rows());

    let net = NetworkConfig::new(vec![layer.clone(), layer], Readout::Softmax)?;
    println!("class probabilities:\n{:?}", forward(&shg, &x, &net)?.to_rows());
    Ok(())
}
