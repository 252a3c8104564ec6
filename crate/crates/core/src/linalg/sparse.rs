use std::fmt::Write as _;

use super::{DenseMatrix, DiagonalMatrix};
use crate::error::{Error, Result};

/// Compressed sparse row matrix. Column indices are strictly increasing within
/// a row and explicit zeros are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    offsets: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<f64>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            offsets: vec![0; rows + 1],
            indices: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            offsets: (0..=n).collect(),
            indices: (0..n).collect(),
            values: vec![1.0; n],
        }
    }

    /// Builds from `(row, col, value)` triplets. Duplicates are summed in
    /// input order; entries that end up zero are dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let mut per_row: Vec<Vec<(usize, f64)>> = vec![Vec::new(); rows];
        for (i, j, v) in triplets {
            if i >= rows || j >= cols {
                return Err(Error::shape(
                    "SparseMatrix::from_triplets",
                    format!("entry ({i},{j}) outside {rows}x{cols}"),
                ));
            }
            per_row[i].push((j, v));
        }
        let mut offsets = Vec::with_capacity(rows + 1);
        let mut indices = Vec::new();
        let mut values = Vec::new();
        offsets.push(0);
        for mut row in per_row {
            // Stable sort keeps input order among duplicates.
            row.sort_by_key(|&(j, _)| j);
            let mut k = 0;
            while k < row.len() {
                let j = row[k].0;
                let mut sum = 0.0;
                while k < row.len() && row[k].0 == j {
                    sum += row[k].1;
                    k += 1;
                }
                if sum != 0.0 {
                    indices.push(j);
                    values.push(sum);
                }
            }
            offsets.push(indices.len());
        }
        Ok(SparseMatrix {
            rows,
            cols,
            offsets,
            indices,
            values,
        })
    }

    /// Same pattern with each value replaced by `f(i, j, v)`; zeros dropped.
    pub(crate) fn map_entries(&self, f: impl Fn(usize, usize, f64) -> f64) -> SparseMatrix {
        let mut offsets = Vec::with_capacity(self.rows + 1);
        let mut indices = Vec::with_capacity(self.nnz());
        let mut values = Vec::with_capacity(self.nnz());
        offsets.push(0);
        for i in 0..self.rows {
            for (j, v) in self.row(i) {
                let w = f(i, j, v);
                if w != 0.0 {
                    indices.push(j);
                    values.push(w);
                }
            }
            offsets.push(indices.len());
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            offsets,
            indices,
            values,
        }
    }

    /// CSR assembly from parts that already satisfy the invariants.
    pub(crate) fn from_csr_unchecked(
        rows: usize,
        cols: usize,
        offsets: Vec<usize>,
        indices: Vec<usize>,
        values: Vec<f64>,
    ) -> SparseMatrix {
        debug_assert_eq!(offsets.len(), rows + 1);
        SparseMatrix {
            rows,
            cols,
            offsets,
            indices,
            values,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Non-zeros of row `i` as `(col, value)` in ascending column order.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let (a, b) = (self.offsets[i], self.offsets[i + 1]);
        self.indices[a..b]
            .iter()
            .copied()
            .zip(self.values[a..b].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (a, b) = (self.offsets[i], self.offsets[i + 1]);
        match self.indices[a..b].binary_search(&j) {
            Ok(k) => self.values[a + k],
            Err(_) => 0.0,
        }
    }

    /// All non-zeros in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, f64)> {
        (0..self.rows)
            .flat_map(|i| self.row(i).map(move |(j, v)| (i, j, v)))
            .collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut counts = vec![0usize; self.cols + 1];
        for &j in &self.indices {
            counts[j + 1] += 1;
        }
        for j in 0..self.cols {
            counts[j + 1] += counts[j];
        }
        let offsets = counts.clone();
        let mut next = counts;
        let mut indices = vec![0; self.nnz()];
        let mut values = vec![0.0; self.nnz()];
        // Rows visited in ascending order keep each transposed row sorted.
        for i in 0..self.rows {
            for (j, v) in self.row(i) {
                let slot = next[j];
                indices[slot] = i;
                values[slot] = v;
                next[j] += 1;
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            offsets,
            indices,
            values,
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut d = DenseMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (j, v) in self.row(i) {
                d[(i, j)] = v;
            }
        }
        d
    }

    /// Sparse times dense, summing each output row over non-zeros in
    /// ascending column order.
    pub fn spmm(&self, b: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != b.rows() {
            return Err(Error::shape(
                "spmm",
                format!(
                    "{}x{} times {}x{}",
                    self.rows,
                    self.cols,
                    b.rows(),
                    b.cols()
                ),
            ));
        }
        let mut out = DenseMatrix::zeros(self.rows, b.cols());
        for i in 0..self.rows {
            let (a, e) = (self.offsets[i], self.offsets[i + 1]);
            let out_row = out.row_mut(i);
            for k in a..e {
                let v = self.values[k];
                for (o, &x) in out_row.iter_mut().zip(b.row(self.indices[k])) {
                    *o += v * x;
                }
            }
        }
        Ok(out)
    }

    /// `D · self`. Entries scaled to zero are removed.
    pub fn scale_rows(&self, d: &DiagonalMatrix) -> Result<SparseMatrix> {
        if d.len() != self.rows {
            return Err(Error::shape(
                "scale_rows",
                format!("diagonal of {} for {} rows", d.len(), self.rows),
            ));
        }
        Ok(self.map_entries(|i, _, v| d.diag()[i] * v))
    }

    /// `self · D`. Entries scaled to zero are removed.
    pub fn scale_cols(&self, d: &DiagonalMatrix) -> Result<SparseMatrix> {
        if d.len() != self.cols {
            return Err(Error::shape(
                "scale_cols",
                format!("diagonal of {} for {} cols", d.len(), self.cols),
            ));
        }
        Ok(self.map_entries(|_, j, v| v * d.diag()[j]))
    }

    /// Weighted row sums `Σ_j a_ij w_j`.
    pub fn row_sums_weighted(&self, w: &[f64]) -> Vec<f64> {
        (0..self.rows)
            .map(|i| self.row(i).map(|(j, v)| v * w[j]).sum())
            .collect()
    }

    /// Column sums `Σ_i a_ij`, accumulated in ascending row order.
    pub fn col_sums(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.cols];
        for i in 0..self.rows {
            for (j, v) in self.row(i) {
                out[j] += v;
            }
        }
        out
    }

    /// Coordinate-triplet dump, one `row col value` line per non-zero.
    pub fn coordinate_dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "% {} {} {}", self.rows, self.cols, self.nnz());
        for (i, j, v) in self.triplets() {
            let _ = writeln!(s, "{i} {j} {v:e}");
        }
        s
    }
}
