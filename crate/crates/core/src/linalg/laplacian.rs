//! Incidence and degree matrices, and the normalized (super)hypergraph
//! Laplacian `Δ = I − D_V^{-1/2} H W D_E^{-1} Hᵀ D_V^{-1/2}`.
//!
//! Zero degrees use the pseudo-inverse convention `0⁻¹ = 0^{-1/2} = 0`, so an
//! isolated vertex gets a unit diagonal in `Δ` and an empty hyperedge
//! contributes nothing.

use super::diag::{pinv, pinv_sqrt};
use super::{DenseMatrix, DiagonalMatrix, SparseMatrix};
use crate::error::{Error, Result};
use crate::structures::Hypergraph;

/// Largest vertex count for which Laplacians are materialized densely.
pub const DEFAULT_DENSE_CAP: usize = 4096;

/// `|V|×|E|` 0/1 incidence matrix.
pub fn incidence_matrix(h: &Hypergraph) -> SparseMatrix {
    let n = h.num_vertices();
    let mut offsets = vec![0usize; n + 1];
    for e in h.hyperedges() {
        for &i in &e.members {
            offsets[i + 1] += 1;
        }
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let nnz = offsets[n];
    let mut next = offsets.clone();
    let mut indices = vec![0usize; nnz];
    // Edges visited in ascending order keep every row sorted.
    for (j, e) in h.hyperedges().iter().enumerate() {
        for &i in &e.members {
            indices[next[i]] = j;
            next[i] += 1;
        }
    }
    SparseMatrix::from_csr_unchecked(n, h.num_edges(), offsets, indices, vec![1.0; nnz])
}

pub fn edge_weights(h: &Hypergraph) -> Vec<f64> {
    h.hyperedges().iter().map(|e| e.weight).collect()
}

/// Vertex degrees `d(v_i) = Σ_j H_ij w_j` and edge degrees `δ(e_j) = Σ_i H_ij`.
pub fn degrees(h: &Hypergraph) -> (DiagonalMatrix, DiagonalMatrix) {
    degrees_from_incidence(&incidence_matrix(h), &edge_weights(h))
}

/// Degrees for an arbitrary non-negative (possibly fuzzy) incidence matrix.
pub fn degrees_from_incidence(
    incidence: &SparseMatrix,
    weights: &[f64],
) -> (DiagonalMatrix, DiagonalMatrix) {
    let dv = incidence.row_sums_weighted(weights);
    let de = incidence.col_sums();
    (
        DiagonalMatrix::new(dv).expect("non-negative vertex degrees"),
        DiagonalMatrix::new(de).expect("non-negative edge degrees"),
    )
}

/// Dense `D_V^{-1/2} H W D_E^{-1} Hᵀ D_V^{-1/2}` for any non-negative incidence.
///
/// Accumulates edge by edge in ascending order; every entry is built from the
/// same products in the same order as its mirror, so the result is exactly
/// symmetric.
pub fn propagator_from_incidence(incidence: &SparseMatrix, weights: &[f64]) -> Result<DenseMatrix> {
    if weights.len() != incidence.cols() {
        return Err(Error::shape(
            "propagator",
            format!("{} weights for {} edges", weights.len(), incidence.cols()),
        ));
    }
    let (dv, de) = degrees_from_incidence(incidence, weights);
    let n = incidence.rows();
    let s: Vec<f64> = dv.diag().iter().map(|&d| pinv_sqrt(d)).collect();
    let by_edge = incidence.transpose();
    let mut p = DenseMatrix::zeros(n, n);
    for j in 0..by_edge.rows() {
        let c = weights[j] * pinv(de.diag()[j]);
        if c == 0.0 {
            continue;
        }
        let members: Vec<(usize, f64)> = by_edge.row(j).collect();
        for &(i, hi) in &members {
            for &(k, hk) in &members {
                p[(i, k)] += (s[i] * s[k]) * (hi * hk) * c;
            }
        }
    }
    Ok(p)
}

/// `I − propagator` for any non-negative incidence.
pub fn laplacian_from_incidence(incidence: &SparseMatrix, weights: &[f64]) -> Result<DenseMatrix> {
    let p = propagator_from_incidence(incidence, weights)?;
    Ok(DenseMatrix::identity(p.rows()).sub(&p).expect("square"))
}

/// The spectral convolution matrix `D_V^{-1/2} H W D_E^{-1} Hᵀ D_V^{-1/2}`.
pub fn normalized_propagator(h: &Hypergraph) -> DenseMatrix {
    propagator_from_incidence(&incidence_matrix(h), &edge_weights(h)).expect("consistent shapes")
}

pub fn normalized_laplacian(h: &Hypergraph) -> DenseMatrix {
    laplacian_from_incidence(&incidence_matrix(h), &edge_weights(h)).expect("consistent shapes")
}

/// Dense Laplacian, refusing graphs above `cap` vertices.
pub fn normalized_laplacian_capped(h: &Hypergraph, cap: usize) -> Result<DenseMatrix> {
    if h.num_vertices() > cap {
        return Err(Error::GuardExceeded(format!(
            "{} vertices exceed the dense cap of {cap}",
            h.num_vertices()
        )));
    }
    Ok(normalized_laplacian(h))
}

/// Row-normalized propagator `D_v^{-1} H W D_e^{-1} Hᵀ` used by attention.
pub fn random_walk_propagator(h: &Hypergraph) -> DenseMatrix {
    let inc = incidence_matrix(h);
    let w = edge_weights(h);
    let (dv, de) = degrees_from_incidence(&inc, &w);
    let by_edge = inc.transpose();
    let n = h.num_vertices();
    let mut p = DenseMatrix::zeros(n, n);
    for j in 0..by_edge.rows() {
        let c = w[j] * pinv(de.diag()[j]);
        for (i, _) in by_edge.row(j) {
            for (k, _) in by_edge.row(j) {
                p[(i, k)] += pinv(dv.diag()[i]) * c;
            }
        }
    }
    p
}

/// Propagator kept in factored sparse form and applied right to left:
/// `S = Hᵀ (D_V^{-1/2} X)` first, then `H̃ S` with
/// `H̃ = D_V^{-1/2} H W D_E^{-1}`.
#[derive(Clone, Debug)]
pub struct PropagatorOperator {
    incidence_t: SparseMatrix,
    normalized: SparseMatrix,
    dv_inv_sqrt: DiagonalMatrix,
}

impl PropagatorOperator {
    pub fn new(h: &Hypergraph) -> Self {
        PropagatorOperator::from_incidence(&incidence_matrix(h), &edge_weights(h))
            .expect("consistent shapes")
    }

    pub fn from_incidence(incidence: &SparseMatrix, weights: &[f64]) -> Result<Self> {
        if weights.len() != incidence.cols() {
            return Err(Error::shape(
                "PropagatorOperator",
                format!("{} weights for {} edges", weights.len(), incidence.cols()),
            ));
        }
        let (dv, de) = degrees_from_incidence(incidence, weights);
        let dv_inv_sqrt = dv.pseudo_inverse_sqrt();
        let de_inv = de.pseudo_inverse();
        // H̃_ij = (D_V^{-1/2})_ii · H_ij · w_j · (D_E^{-1})_jj
        let normalized = incidence.map_entries(|i, j, h| dv_inv_sqrt.diag()[i] * h * weights[j] * de_inv.diag()[j]);
        Ok(PropagatorOperator {
            incidence_t: incidence.transpose(),
            normalized,
            dv_inv_sqrt,
        })
    }

    pub fn dim(&self) -> usize {
        self.normalized.rows()
    }

    pub fn apply(&self, x: &DenseMatrix) -> Result<DenseMatrix> {
        if x.rows() != self.dim() {
            return Err(Error::shape(
                "PropagatorOperator::apply",
                format!("{} feature rows for {} vertices", x.rows(), self.dim()),
            ));
        }
        let scaled = self.dv_inv_sqrt.scale_rows(x)?;
        let s = self.incidence_t.spmm(&scaled)?;
        self.normalized.spmm(&s)
    }
}
