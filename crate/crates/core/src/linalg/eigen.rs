//! Small dense symmetric eigendecomposition, used by spectral clustering and
//! the spectral property checks.

use nalgebra::{DMatrix, SymmetricEigen};

use super::DenseMatrix;
use crate::error::{Error, Result};

/// Eigenvalues in ascending order with matching unit eigenvectors (as
/// columns). Ties keep the solver's order.
pub fn symmetric_eigen(m: &DenseMatrix) -> Result<(Vec<f64>, DenseMatrix)> {
    if m.rows() != m.cols() {
        return Err(Error::shape(
            "symmetric_eigen",
            format!("{}x{} is not square", m.rows(), m.cols()),
        ));
    }
    m.ensure_finite("symmetric_eigen")?;
    let n = m.rows();
    if n == 0 {
        return Ok((Vec::new(), DenseMatrix::zeros(0, 0)));
    }
    let a = DMatrix::from_row_slice(n, n, m.as_slice());
    let eig = SymmetricEigen::new(a);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DenseMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok((values, vectors))
}

pub fn symmetric_eigenvalues(m: &DenseMatrix) -> Result<Vec<f64>> {
    Ok(symmetric_eigen(m)?.0)
}
