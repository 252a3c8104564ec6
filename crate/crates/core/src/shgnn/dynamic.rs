//! Dynamic superhypergraph construction from feature embeddings, and the
//! layer-by-layer network that rebuilds its structure before each
//! convolution.

use super::conv::{shgnn_convolve, LayerParams};
use crate::error::{Error, Result};
use crate::kmeans::{kmeans, DEFAULT_MAX_ITERS};
use crate::linalg::DenseMatrix;
use crate::structures::{BaseVertex, NestedElement, Superedge, SuperHyperGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DynamicConfig {
    /// Number of supervertices.
    pub s: usize,
    /// Number of superedges.
    pub t: usize,
    pub kmeans_iters: usize,
    pub seed: u64,
}

impl DynamicConfig {
    pub fn new(s: usize, t: usize, seed: u64) -> Self {
        DynamicConfig {
            s,
            t,
            kmeans_iters: DEFAULT_MAX_ITERS,
            seed,
        }
    }
}

/// Base vertices `v1..vn`.
pub fn default_vertex_names(n: usize) -> Vec<BaseVertex> {
    (1..=n)
        .map(|i| BaseVertex::new(format!("v{i}")).expect("non-empty"))
        .collect()
}

// Groups of member indices ordered by their smallest member.
fn groups(assignment: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut g: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, &c) in assignment.iter().enumerate() {
        g[c].push(i);
    }
    g.sort_by_key(|members| members.first().copied().unwrap_or(usize::MAX));
    g
}

/// Level-1 superhypergraph on `names`: `s` supervertices are the k-means
/// clusters of the rows of `x`; `t` superedges group the `s` cluster centroids
/// by a second k-means. Superedges have unit weight.
pub fn dynamic_construct_named(
    names: &[BaseVertex],
    x: &DenseMatrix,
    cfg: &DynamicConfig,
) -> Result<SuperHyperGraph> {
    let n = x.rows();
    if names.len() != n {
        return Err(Error::shape(
            "dynamic_construct",
            format!("{} names for {n} feature rows", names.len()),
        ));
    }
    if cfg.s == 0 || cfg.s > n {
        return Err(Error::InvalidArgument(format!(
            "supervertex count s = {} must satisfy 1 <= s <= {n}",
            cfg.s
        )));
    }
    if cfg.t == 0 || cfg.t > cfg.s {
        return Err(Error::InvalidArgument(format!(
            "superedge count t = {} must satisfy 1 <= t <= s = {}",
            cfg.t, cfg.s
        )));
    }
    if cfg.kmeans_iters == 0 {
        return Err(Error::InvalidArgument("kmeans_iters must be at least 1".into()));
    }
    let vertex_clusters = kmeans(x, cfg.s, cfg.kmeans_iters, cfg.seed)?;
    let vertex_groups = groups(&vertex_clusters.assignment, cfg.s);

    // Centroids in supervertex order.
    let centroids = DenseMatrix::from_fn(cfg.s, x.cols(), |g, c| {
        let members = &vertex_groups[g];
        members.iter().map(|&i| x[(i, c)]).sum::<f64>() / members.len() as f64
    });
    let edge_clusters = kmeans(&centroids, cfg.t, cfg.kmeans_iters, cfg.seed.wrapping_add(1))?;
    let edge_groups = groups(&edge_clusters.assignment, cfg.t);

    let supervertices: Vec<NestedElement> = vertex_groups
        .iter()
        .map(|members| NestedElement::set(members.iter().map(|&i| NestedElement::Leaf(names[i].clone()))))
        .collect();
    let superedges = edge_groups
        .iter()
        .enumerate()
        .map(|(id, members)| {
            Superedge::new(
                members.iter().map(|&g| supervertices[g].clone()).collect(),
                1.0,
                id as u64,
            )
        })
        .collect();
    SuperHyperGraph::new(names.to_vec(), 1, supervertices, superedges)
}

/// [`dynamic_construct_named`] with base vertices named `v1..vn`.
pub fn dynamic_construct(x: &DenseMatrix, cfg: &DynamicConfig) -> Result<SuperHyperGraph> {
    dynamic_construct_named(&default_vertex_names(x.rows()), x, cfg)
}

/// For each layer, rebuilds the superhypergraph from the current embeddings
/// and applies one SHGNN convolution.
pub fn dshgnn_forward(x0: &DenseMatrix, layers: &[(DynamicConfig, LayerParams)]) -> Result<DenseMatrix> {
    let names = default_vertex_names(x0.rows());
    let mut x = x0.clone();
    for (cfg, params) in layers {
        let shg = dynamic_construct_named(&names, &x, cfg)?;
        x = shgnn_convolve(&shg, &x, params)?;
    }
    Ok(x)
}
