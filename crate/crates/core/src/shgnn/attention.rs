//! Hypergraph attention: incidence entries replaced by coefficients
//! `α_ij = softmax_{j ∈ E_i}(LeakyReLU(aᵀ [x_i Θ ‖ u_j Θ]))`, where `u_j` is
//! the mean feature of the (expanded) members of edge `j`.

use crate::error::{Error, Result};
use crate::linalg::diag::pinv;
use crate::linalg::{degrees, softmax_in_place, Activation, DenseMatrix, SparseMatrix};
use crate::structures::{Hypergraph, SuperHyperGraph};

#[derive(Clone, Debug, PartialEq)]
pub struct AttentionParams {
    /// Length `2 · cols(theta)`.
    pub a: Vec<f64>,
    pub theta: DenseMatrix,
    /// Slope of the LeakyReLU applied to the attention logits.
    pub slope: f64,
    /// Output activation.
    pub activation: Activation,
}

impl AttentionParams {
    pub fn new(a: Vec<f64>, theta: DenseMatrix) -> Self {
        AttentionParams {
            a,
            theta,
            slope: crate::linalg::DEFAULT_LEAKY_SLOPE,
            activation: Activation::LeakyRelu(crate::linalg::DEFAULT_LEAKY_SLOPE),
        }
    }
}

/// Mean member feature per edge; an empty edge gets the zero vector.
pub fn edge_mean_features(h: &Hypergraph, x: &DenseMatrix) -> DenseMatrix {
    let mut u = DenseMatrix::zeros(h.num_edges(), x.cols());
    for (j, e) in h.hyperedges().iter().enumerate() {
        if e.members.is_empty() {
            continue;
        }
        let row = u.row_mut(j);
        for &i in &e.members {
            for (acc, &v) in row.iter_mut().zip(x.row(i)) {
                *acc += v;
            }
        }
        let inv = 1.0 / e.members.len() as f64;
        for acc in row.iter_mut() {
            *acc *= inv;
        }
    }
    u
}

/// Attention-weighted incidence matrix `H̃` with `H̃_ij = α_ij` on incident
/// pairs only.
pub fn attention_incidence(
    h: &Hypergraph,
    x: &DenseMatrix,
    a: &[f64],
    theta: &DenseMatrix,
    slope: f64,
) -> Result<SparseMatrix> {
    if x.rows() != h.num_vertices() {
        return Err(Error::shape(
            "attention",
            format!("{} feature rows for {} vertices", x.rows(), h.num_vertices()),
        ));
    }
    if theta.rows() != x.cols() {
        return Err(Error::shape(
            "attention",
            format!("theta has {} rows, features have {} columns", theta.rows(), x.cols()),
        ));
    }
    let dp = theta.cols();
    if a.len() != 2 * dp {
        return Err(Error::shape(
            "attention",
            format!("attention vector of {} for 2·{dp}", a.len()),
        ));
    }
    x.ensure_finite("features")?;
    let xp = x.matmul(theta)?;
    let up = edge_mean_features(h, x).matmul(theta)?;
    let dot = |v: &[f64], w: &[f64]| -> f64 { v.iter().zip(w).map(|(p, q)| p * q).sum() };
    let vertex_term: Vec<f64> = (0..xp.rows()).map(|i| dot(&a[..dp], xp.row(i))).collect();
    let edge_term: Vec<f64> = (0..up.rows()).map(|j| dot(&a[dp..], up.row(j))).collect();

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.num_vertices()];
    for (j, e) in h.hyperedges().iter().enumerate() {
        for &i in &e.members {
            incident[i].push(j);
        }
    }
    let leaky = Activation::LeakyRelu(slope);
    let mut triplets = Vec::with_capacity(h.nnz());
    for (i, edges) in incident.iter().enumerate() {
        let mut logits: Vec<f64> = edges
            .iter()
            .map(|&j| leaky.apply(vertex_term[i] + edge_term[j]))
            .collect();
        softmax_in_place(&mut logits);
        triplets.extend(edges.iter().zip(logits).map(|(&j, alpha)| (i, j, alpha)));
    }
    SparseMatrix::from_triplets(h.num_vertices(), h.num_edges(), triplets)
}

/// `σ(D_v^{-1} H̃ W D_e^{-1} H̃ᵀ X)` with degrees taken from the crisp incidence.
pub fn attention_convolve(h: &Hypergraph, x: &DenseMatrix, p: &AttentionParams) -> Result<DenseMatrix> {
    let att = attention_incidence(h, x, &p.a, &p.theta, p.slope)?;
    let (dv, de) = degrees(h);
    let edge_scale: Vec<f64> = h
        .hyperedges()
        .iter()
        .zip(de.diag())
        .map(|(e, &d)| e.weight * pinv(d))
        .collect();
    let s = att.transpose().spmm(x)?;
    let mut m = att.spmm(&DenseMatrix::from_fn(s.rows(), s.cols(), |j, c| edge_scale[j] * s[(j, c)]))?;
    for i in 0..m.rows() {
        let f = pinv(dv.diag()[i]);
        for v in m.row_mut(i) {
            *v *= f;
        }
    }
    Ok(p.activation.apply_matrix(&m))
}

/// Superhypergraph attention: attention over the expanded structure, with
/// `u_j` aggregated over the base vertices each superedge expands to.
pub fn shg_attention_convolve(shg: &SuperHyperGraph, x: &DenseMatrix, p: &AttentionParams) -> Result<DenseMatrix> {
    attention_convolve(&shg.expand(), x, p)
}

pub fn shg_attention_incidence(shg: &SuperHyperGraph, x: &DenseMatrix, p: &AttentionParams) -> Result<SparseMatrix> {
    attention_incidence(&shg.expand(), x, &p.a, &p.theta, p.slope)
}
