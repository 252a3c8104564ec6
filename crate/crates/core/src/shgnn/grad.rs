use super::conv::{shgnn_pre_activation, LayerParams};
use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, PropagatorOperator};
use crate::structures::SuperHyperGraph;

/// Gradient of `⟨upstream, Y⟩` with respect to `Θ`, where
/// `Y = σ(P X Θ)` is one SHGNN layer: `(P X)ᵀ (upstream ⊙ σ'(P X Θ))`.
pub fn grad_theta(
    shg: &SuperHyperGraph,
    x: &DenseMatrix,
    p: &LayerParams,
    upstream: &DenseMatrix,
) -> Result<DenseMatrix> {
    let pre = shgnn_pre_activation(shg, x, p)?;
    if upstream.shape() != pre.shape() {
        return Err(Error::shape(
            "grad_theta",
            format!("upstream {:?} for output {:?}", upstream.shape(), pre.shape()),
        ));
    }
    let h = shg.expand();
    let op = PropagatorOperator::from_incidence(&crate::linalg::incidence_matrix(&h), &p.weights_for(&h)?)?;
    let propagated = op.apply(x)?;
    let local = DenseMatrix::from_fn(pre.rows(), pre.cols(), |i, j| {
        upstream[(i, j)] * p.activation.derivative(pre[(i, j)])
    });
    propagated.transpose().matmul(&local)
}
