//! Sparse incidence matrices, diagonal degree matrices, dense feature
//! matrices, the normalized Laplacian, and the pointwise kernels used by the
//! network modules. All arithmetic is `f64` with ascending-index summation.

mod activation;
mod dense;
pub(crate) mod diag;
pub mod eigen;
mod laplacian;
mod sparse;

pub use activation::{leaky_relu, relu, softmax_rows, Activation, DEFAULT_LEAKY_SLOPE};
pub(crate) use activation::softmax_in_place;
pub use dense::DenseMatrix;
pub use diag::{scale_cols, scale_rows, DiagonalMatrix};
pub use laplacian::{
    degrees, degrees_from_incidence, edge_weights, incidence_matrix, laplacian_from_incidence,
    normalized_laplacian, normalized_laplacian_capped, normalized_propagator,
    propagator_from_incidence, random_walk_propagator, PropagatorOperator, DEFAULT_DENSE_CAP,
};
pub use sparse::SparseMatrix;

use crate::error::Result;

/// Sparse times dense.
pub fn spmm(a: &SparseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    a.spmm(b)
}

/// Dense times dense.
pub fn matmul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    a.matmul(b)
}
