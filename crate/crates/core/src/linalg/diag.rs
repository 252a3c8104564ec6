use super::DenseMatrix;
use crate::error::{Error, Result};

/// Diagonal matrix with non-negative entries.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalMatrix {
    diag: Vec<f64>,
}

impl DiagonalMatrix {
    pub fn new(diag: Vec<f64>) -> Result<Self> {
        if let Some(bad) = diag.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::InvalidArgument(format!(
                "diagonal entries must be finite and non-negative, got {bad}"
            )));
        }
        Ok(DiagonalMatrix { diag })
    }

    pub fn ones(n: usize) -> Self {
        DiagonalMatrix { diag: vec![1.0; n] }
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// `d⁻¹` with `0⁻¹ := 0`.
    pub fn pseudo_inverse(&self) -> DiagonalMatrix {
        DiagonalMatrix {
            diag: self.diag.iter().map(|&d| pinv(d)).collect(),
        }
    }

    /// `d^{-1/2}` with `0^{-1/2} := 0`.
    pub fn pseudo_inverse_sqrt(&self) -> DiagonalMatrix {
        DiagonalMatrix {
            diag: self.diag.iter().map(|&d| pinv_sqrt(d)).collect(),
        }
    }

    pub fn sqrt(&self) -> DiagonalMatrix {
        DiagonalMatrix {
            diag: self.diag.iter().map(|d| d.sqrt()).collect(),
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.diag.len();
        DenseMatrix::from_fn(n, n, |i, j| if i == j { self.diag[i] } else { 0.0 })
    }

    /// `D · m`.
    pub fn scale_rows(&self, m: &DenseMatrix) -> Result<DenseMatrix> {
        scale_rows(m, self)
    }
}

pub(crate) fn pinv(d: f64) -> f64 {
    if d == 0.0 {
        0.0
    } else {
        1.0 / d
    }
}

pub(crate) fn pinv_sqrt(d: f64) -> f64 {
    if d == 0.0 {
        0.0
    } else {
        1.0 / d.sqrt()
    }
}

/// `D · m` for a dense `m`.
pub fn scale_rows(m: &DenseMatrix, d: &DiagonalMatrix) -> Result<DenseMatrix> {
    if d.len() != m.rows() {
        return Err(Error::shape(
            "scale_rows",
            format!("diagonal of {} for {} rows", d.len(), m.rows()),
        ));
    }
    Ok(DenseMatrix::from_fn(m.rows(), m.cols(), |i, j| d.diag[i] * m[(i, j)]))
}

/// `m · D` for a dense `m`.
pub fn scale_cols(m: &DenseMatrix, d: &DiagonalMatrix) -> Result<DenseMatrix> {
    if d.len() != m.cols() {
        return Err(Error::shape(
            "scale_cols",
            format!("diagonal of {} for {} cols", d.len(), m.cols()),
        ));
    }
    Ok(DenseMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)] * d.diag[j]))
}
