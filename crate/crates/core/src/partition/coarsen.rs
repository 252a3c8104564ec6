use std::collections::BTreeMap;

use crate::structures::{BaseVertex, Hyperedge, Hypergraph};

/// Target size ratio of one coarsening step.
pub const COARSENING_RATIO: f64 = 0.6;

/// One coarsening step: the coarse hypergraph, the fine-to-coarse map and the
/// number of original vertices behind each coarse vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct CoarseLevel {
    pub hypergraph: Hypergraph,
    pub mapping: Vec<usize>,
    pub vertex_weights: Vec<usize>,
}

impl CoarseLevel {
    pub fn is_identity(&self) -> bool {
        self.hypergraph.num_vertices() == self.mapping.len()
    }
}

/// Clique-expansion pair weights `w(e)/(|e|−1)` summed over edges, as sorted
/// neighbor lists.
fn pair_weights(h: &Hypergraph) -> Vec<BTreeMap<usize, f64>> {
    let mut adj = vec![BTreeMap::new(); h.num_vertices()];
    for e in h.hyperedges() {
        let m = &e.members;
        if m.len() < 2 {
            continue;
        }
        let share = e.weight / (m.len() - 1) as f64;
        for (a, &u) in m.iter().enumerate() {
            for &v in &m[a + 1..] {
                *adj[u].entry(v).or_insert(0.0) += share;
                *adj[v].entry(u).or_insert(0.0) += share;
            }
        }
    }
    adj
}

/// Heavy-edge matching in ascending vertex order: each unmatched vertex pairs
/// with the unmatched neighbor of largest positive pair weight (lowest index on
/// ties), provided the merged weight stays within `max_weight`. Duplicate
/// coarse edges are merged with summed weights. Returns the identity level
/// when the result would exceed `⌈0.6·|V|⌉` vertices.
pub fn coarsen_weighted(h: &Hypergraph, vertex_weights: &[usize], max_weight: usize) -> CoarseLevel {
    let n = h.num_vertices();
    let adj = pair_weights(h);
    let mut mate = vec![usize::MAX; n];
    for v in 0..n {
        if mate[v] != usize::MAX {
            continue;
        }
        let mut best: Option<(usize, f64)> = None;
        for (&u, &w) in &adj[v] {
            if mate[u] != usize::MAX || u == v || w <= 0.0 || vertex_weights[u] + vertex_weights[v] > max_weight {
                continue;
            }
            if best.is_none_or(|(_, bw)| w > bw) {
                best = Some((u, w));
            }
        }
        match best {
            Some((u, _)) => {
                mate[v] = u;
                mate[u] = v;
            }
            None => mate[v] = v,
        }
    }
    let mut mapping = vec![usize::MAX; n];
    let mut coarse_weights = Vec::new();
    for v in 0..n {
        if mapping[v] != usize::MAX {
            continue;
        }
        let id = coarse_weights.len();
        mapping[v] = id;
        let mut w = vertex_weights[v];
        if mate[v] != v {
            mapping[mate[v]] = id;
            w += vertex_weights[mate[v]];
        }
        coarse_weights.push(w);
    }
    let m = coarse_weights.len();
    let limit = (n as f64 * COARSENING_RATIO).ceil() as usize;
    if m > limit || m == n {
        return identity(h, vertex_weights);
    }

    let mut merged: BTreeMap<Vec<usize>, (f64, u64)> = BTreeMap::new();
    let mut order = Vec::new();
    for e in h.hyperedges() {
        let mut image: Vec<usize> = e.members.iter().map(|&v| mapping[v]).collect();
        image.sort_unstable();
        image.dedup();
        match merged.get_mut(&image) {
            Some(entry) => entry.0 += e.weight,
            None => {
                merged.insert(image.clone(), (e.weight, e.id));
                order.push(image);
            }
        }
    }
    let edges = order
        .into_iter()
        .map(|image| {
            let (weight, id) = merged[&image];
            Hyperedge { members: image, weight, id }
        })
        .collect();
    let vertices = (0..m).map(|i| BaseVertex::new(format!("c{i}")).expect("non-empty")).collect();
    CoarseLevel {
        hypergraph: Hypergraph::with_edges(vertices, edges).expect("valid coarse structure"),
        mapping,
        vertex_weights: coarse_weights,
    }
}

fn identity(h: &Hypergraph, vertex_weights: &[usize]) -> CoarseLevel {
    CoarseLevel {
        hypergraph: h.clone(),
        mapping: (0..h.num_vertices()).collect(),
        vertex_weights: vertex_weights.to_vec(),
    }
}

/// [`coarsen_weighted`] with unit vertex weights and no merge cap.
pub fn coarsen(h: &Hypergraph) -> CoarseLevel {
    coarsen_weighted(h, &vec![1; h.num_vertices()], usize::MAX)
}
