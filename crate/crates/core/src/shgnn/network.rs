use super::conv::{shgnn_convolve, LayerParams};
use crate::error::{Error, Result};
use crate::linalg::{softmax_rows, DenseMatrix};
use crate::structures::SuperHyperGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Readout {
    Softmax,
    None,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NetworkConfig {
    pub layers: Vec<LayerParams>,
    pub readout: Readout,
}

impl NetworkConfig {
    pub fn new(layers: Vec<LayerParams>, readout: Readout) -> Result<Self> {
        for (l, pair) in layers.windows(2).enumerate() {
            if pair[0].theta.cols() != pair[1].theta.rows() {
                return Err(Error::shape(
                    "NetworkConfig",
                    format!(
                        "layer {l} outputs {} columns but layer {} expects {}",
                        pair[0].theta.cols(),
                        l + 1,
                        pair[1].theta.rows()
                    ),
                ));
            }
        }
        Ok(NetworkConfig { layers, readout })
    }
}

/// Applies the layers in order, then the readout.
pub fn forward(shg: &SuperHyperGraph, x: &DenseMatrix, net: &NetworkConfig) -> Result<DenseMatrix> {
    let mut h = x.clone();
    for layer in &net.layers {
        h = shgnn_convolve(shg, &h, layer)?;
    }
    Ok(match net.readout {
        Readout::Softmax => softmax_rows(&h),
        Readout::None => h,
    })
}
