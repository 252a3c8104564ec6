//! Attention-weighted incidence and convolution.

use superhyper::io::parse_document;
use superhyper::linalg::DenseMatrix;
use superhyper::shgnn::{shg_attention_convolve, shg_attention_incidence, AttentionParams};

fn main() -> superhyper::Result<()> {
    let shg = parse_document(include_str!("../data/worked_example.json"), true)?
        .document
        .superhypergraph()?;
    let x = DenseMatrix::from_rows(&[[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])?;
    let theta = DenseMatrix::identity(2);
    let params = AttentionParams::new(vec![0.3, -0.2, 0.1, 0.4], theta);
    let h = shg_attention_incidence(&shg, &x, &params)?;
    println!("attention incidence:\n{:?}", h.to_dense().to_rows());
    println!("output:\n{:?}", shg_attention_convolve(&shg, &x, &params)?.to_rows());
    Ok(())
}
