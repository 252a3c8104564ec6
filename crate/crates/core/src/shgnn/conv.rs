use crate::error::{Error, Result};
use crate::linalg::{
    degrees_from_incidence, edge_weights, incidence_matrix, Activation, DenseMatrix,
    DiagonalMatrix, PropagatorOperator, SparseMatrix,
};
use crate::structures::{Hypergraph, SuperHyperGraph};

/// Parameters of one spectral convolution layer.
#[derive(Clone, Debug, PartialEq)]
pub struct LayerParams {
    /// `d × c` learnable map.
    pub theta: DenseMatrix,
    /// Edge weights `W`. `None` uses the graph's own superedge weights.
    pub edge_weights: Option<DiagonalMatrix>,
    pub activation: Activation,
}

impl LayerParams {
    pub fn new(theta: DenseMatrix, activation: Activation) -> Self {
        LayerParams {
            theta,
            edge_weights: None,
            activation,
        }
    }

    pub fn with_edge_weights(mut self, w: DiagonalMatrix) -> Self {
        self.edge_weights = Some(w);
        self
    }

    pub(crate) fn weights_for(&self, h: &Hypergraph) -> Result<Vec<f64>> {
        self.weights_or(edge_weights(h))
    }

    pub(crate) fn weights_or(&self, graph_weights: Vec<f64>) -> Result<Vec<f64>> {
        match &self.edge_weights {
            None => Ok(graph_weights),
            Some(w) if w.len() == graph_weights.len() => Ok(w.diag().to_vec()),
            Some(w) => Err(Error::shape(
                "LayerParams",
                format!("{} edge weights for {} edges", w.len(), graph_weights.len()),
            )),
        }
    }
}

pub(crate) fn check_inputs(num_vertices: usize, x: &DenseMatrix, p: &LayerParams) -> Result<()> {
    if x.rows() != num_vertices {
        return Err(Error::shape(
            "convolve",
            format!("{} feature rows for {num_vertices} base vertices", x.rows()),
        ));
    }
    if p.theta.rows() != x.cols() {
        return Err(Error::shape(
            "convolve",
            format!(
                "theta is {}x{} but features have {} columns",
                p.theta.rows(),
                p.theta.cols(),
                x.cols()
            ),
        ));
    }
    x.ensure_finite("features")?;
    p.theta.ensure_finite("theta")
}

/// `D_V^{-1/2} H W D_E^{-1} Hᵀ D_V^{-1/2} X Θ` on a flat hypergraph, evaluated
/// right to left through the sparse factors.
pub(crate) fn hgnn_pre_activation(h: &Hypergraph, x: &DenseMatrix, p: &LayerParams) -> Result<DenseMatrix> {
    check_inputs(h.num_vertices(), x, p)?;
    let op = PropagatorOperator::from_incidence(&incidence_matrix(h), &p.weights_for(h)?)?;
    op.apply(x)?.matmul(&p.theta)
}

/// Hypergraph convolution `σ(D_V^{-1/2} H W D_E^{-1} Hᵀ D_V^{-1/2} X Θ)`.
pub fn hgnn_convolve(h: &Hypergraph, x: &DenseMatrix, p: &LayerParams) -> Result<DenseMatrix> {
    Ok(p.activation.apply_matrix(&hgnn_pre_activation(h, x, p)?))
}

/// SHGNN convolution. Expands the superhypergraph, builds the sparse incidence
/// and degree matrices, forms `S = H'ᵀ (D_V^{-1/2} X)` and then
/// `M = (D_V^{-1/2} H' W D_E^{-1}) S`, and returns `σ(M Θ)`. Zero degrees use
/// the pseudo-inverse.
pub fn shgnn_convolve(shg: &SuperHyperGraph, x: &DenseMatrix, p: &LayerParams) -> Result<DenseMatrix> {
    hgnn_convolve(&shg.expand(), x, p)
}

/// Pre-activation of [`shgnn_convolve`].
pub fn shgnn_pre_activation(shg: &SuperHyperGraph, x: &DenseMatrix, p: &LayerParams) -> Result<DenseMatrix> {
    hgnn_pre_activation(&shg.expand(), x, p)
}

/// `Ĥ = D_V^{-1/2} H' W D_E^{-1}` as an explicit sparse matrix.
fn normalized_incidence(incidence: &SparseMatrix, weights: &[f64]) -> Result<(SparseMatrix, DiagonalMatrix)> {
    let (dv, de) = degrees_from_incidence(incidence, weights);
    let dv_inv_sqrt = dv.pseudo_inverse_sqrt();
    let w = DiagonalMatrix::new(weights.to_vec())?;
    let h_hat = incidence
        .scale_rows(&dv_inv_sqrt)?
        .scale_cols(&w)?
        .scale_cols(&de.pseudo_inverse())?;
    Ok((h_hat, dv_inv_sqrt))
}

/// n-SHGNN convolution for a superhypergraph of any level. Builds the expanded
/// hypergraph through recursive expansion of each superedge, forms
/// `Ĥ = D_V^{-1/2} H' W D_E^{-1}` and returns `σ(Ĥ H'ᵀ D_V^{-1/2} X Θ)`,
/// applying `Θ` to the features first.
pub fn nshgnn_convolve(shg: &SuperHyperGraph, x: &DenseMatrix, p: &LayerParams) -> Result<DenseMatrix> {
    let h = shg.expand_recursive();
    check_inputs(h.num_vertices(), x, p)?;
    let incidence = incidence_matrix(&h);
    let (h_hat, dv_inv_sqrt) = normalized_incidence(&incidence, &p.weights_for(&h)?)?;
    let projected = x.matmul(&p.theta)?;
    let scaled = dv_inv_sqrt.scale_rows(&projected)?;
    let pre = h_hat.spmm(&incidence.transpose().spmm(&scaled)?)?;
    Ok(p.activation.apply_matrix(&pre))
}
