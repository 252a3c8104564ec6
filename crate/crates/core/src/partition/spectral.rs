use super::objective::Partition;
use crate::error::{Error, Result};
use crate::kmeans::{kmeans, DEFAULT_MAX_ITERS};
use crate::linalg::eigen::symmetric_eigen;
use crate::linalg::{normalized_laplacian_capped, DenseMatrix, DEFAULT_DENSE_CAP};
use crate::structures::{Hypergraph, SuperHyperGraph};

/// Spectral clustering under the dense vertex cap.
pub fn ncut_spectral(h: &Hypergraph, k: usize, seed: u64) -> Result<Partition> {
    ncut_spectral_capped(h, k, seed, DEFAULT_DENSE_CAP)
}

/// Embeds vertices by the eigenvectors of the `k` smallest Laplacian
/// eigenvalues, normalizes each embedded row to unit length and clusters the
/// rows with seeded k-means. Balance is not enforced (`c` is left at 1).
pub fn ncut_spectral_capped(h: &Hypergraph, k: usize, seed: u64, cap: usize) -> Result<Partition> {
    let n = h.num_vertices();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..={n}")));
    }
    let lap = normalized_laplacian_capped(h, cap)?;
    if k == 1 {
        return Partition::new(vec![0; n], 1, 1.0);
    }
    let (_, vectors) = symmetric_eigen(&lap)?;
    let mut embedding = DenseMatrix::from_fn(n, k, |r, c| vectors[(r, c)]);
    for r in 0..n {
        let row = embedding.row_mut(r);
        let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            row.iter_mut().for_each(|x| *x /= norm);
        }
    }
    let clusters = kmeans(&embedding, k, DEFAULT_MAX_ITERS, seed)?;
    Partition::new(clusters.assignment, k, 1.0)
}

/// Normalized cut `Σ_i cut(V_i)/vol(V_i)` with the hypergraph boundary
/// `cut(C) = Σ_e w(e)·|e∩C|·|e∖C|/|e|` and `vol(C) = Σ_{v∈C} d(v)`. Parts of
/// zero volume contribute 0.
pub fn ncut_value(h: &Hypergraph, p: &Partition) -> Result<f64> {
    if p.assignment.len() != h.num_vertices() {
        return Err(Error::InvalidArgument(format!(
            "partition covers {} of {} vertices",
            p.assignment.len(),
            h.num_vertices()
        )));
    }
    let mut cut = vec![0.0; p.k];
    let mut vol = vec![0.0; p.k];
    for e in h.hyperedges() {
        let size = e.members.len();
        let mut inside = vec![0usize; p.k];
        for &v in &e.members {
            inside[p.assignment[v]] += 1;
            vol[p.assignment[v]] += e.weight;
        }
        for (part, &m) in inside.iter().enumerate() {
            if m > 0 {
                cut[part] += e.weight * (m * (size - m)) as f64 / size as f64;
            }
        }
    }
    Ok(cut
        .iter()
        .zip(&vol)
        .map(|(&c, &v)| if v > 0.0 { c / v } else { 0.0 })
        .sum())
}

/// Weighted degree `Σ_e w(e)` over the edges containing each vertex.
pub fn hypergraph_degree_centrality(h: &Hypergraph) -> Vec<f64> {
    let mut c = vec![0.0; h.num_vertices()];
    for e in h.hyperedges() {
        for &v in &e.members {
            c[v] += e.weight;
        }
    }
    c
}

/// Degree centrality of each base vertex in the expansion of `shg`.
pub fn degree_centrality(shg: &SuperHyperGraph) -> Vec<f64> {
    hypergraph_degree_centrality(&shg.expand())
}
