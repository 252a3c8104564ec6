use crate::error::{Error, Result};
use crate::linalg::{laplacian_from_incidence, DenseMatrix, PropagatorOperator, SparseMatrix};
use crate::shgnn::LayerParams;
use crate::structures::{BaseVertex, Hypergraph, ValidationReport, Violation, ViolationKind};

/// Fuzzy hyperedge: a membership degree for each listed vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyEdge {
    /// `(vertex index, μ)` sorted by vertex index, one entry per vertex.
    pub membership: Vec<(usize, f64)>,
    pub weight: f64,
}

impl FuzzyEdge {
    pub fn max_membership(&self) -> f64 {
        self.membership.iter().map(|&(_, m)| m).fold(0.0, f64::max)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.membership.iter().filter(|&&(_, m)| m > 0.0).map(|&(i, _)| i)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyHypergraph {
    vertices: Vec<BaseVertex>,
    edges: Vec<FuzzyEdge>,
}

impl FuzzyHypergraph {
    /// Rejects out-of-range indices, memberships outside `[0,1]`, repeated
    /// vertices within an edge and invalid weights.
    pub fn new(vertices: Vec<BaseVertex>, mut edges: Vec<FuzzyEdge>) -> Result<Self> {
        let n = vertices.len();
        for (j, e) in edges.iter_mut().enumerate() {
            e.membership.sort_by_key(|&(i, _)| i);
            if e.membership.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidArgument(format!("fuzzy edge {j} lists a vertex twice")));
            }
            if let Some(&(i, m)) = e.membership.iter().find(|&&(i, m)| i >= n || !(0.0..=1.0).contains(&m)) {
                return Err(Error::InvalidArgument(format!(
                    "fuzzy edge {j}: invalid entry (vertex {i}, membership {m})"
                )));
            }
            if !e.weight.is_finite() || e.weight < 0.0 {
                return Err(Error::InvalidArgument(format!("fuzzy edge {j} has invalid weight {}", e.weight)));
            }
        }
        Ok(FuzzyHypergraph { vertices, edges })
    }

    /// Lifts a crisp hypergraph: every member gets membership 1.
    pub fn from_crisp(h: &Hypergraph) -> Self {
        let edges = h
            .hyperedges()
            .iter()
            .map(|e| FuzzyEdge {
                membership: e.members.iter().map(|&i| (i, 1.0)).collect(),
                weight: e.weight,
            })
            .collect();
        FuzzyHypergraph {
            vertices: h.vertices().to_vec(),
            edges,
        }
    }

    pub fn vertices(&self) -> &[BaseVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[FuzzyEdge] {
        &self.edges
    }

    pub fn weights(&self) -> Vec<f64> {
        self.edges.iter().map(|e| e.weight).collect()
    }

    /// In strict mode every vertex must lie in the support of some edge.
    pub fn validate(&self, strict: bool) -> ValidationReport {
        let mut violations = Vec::new();
        if strict {
            let mut covered = vec![false; self.vertices.len()];
            for e in &self.edges {
                for i in e.support() {
                    covered[i] = true;
                }
            }
            for (i, c) in covered.iter().enumerate() {
                if !c {
                    violations.push(Violation {
                        path: "/fuzzy_hypergraph/edges".into(),
                        kind: ViolationKind::Membership(format!(
                            "vertex {:?} lies in no edge support",
                            self.vertices[i].name()
                        )),
                    });
                }
            }
        }
        ValidationReport { violations }
    }
}

/// Largest membership over all edges; 0 for an edgeless graph.
pub fn height(fh: &FuzzyHypergraph) -> f64 {
    fh.edges.iter().map(FuzzyEdge::max_membership).fold(0.0, f64::max)
}

/// c-level hypergraph: each edge keeps the vertices with `μ ≥ c`; edges left
/// empty are dropped, and the vertex set shrinks to the union of the cuts.
/// Surviving edges keep their weight and carry their original index as id.
pub fn c_cut(fh: &FuzzyHypergraph, c: f64) -> Result<Hypergraph> {
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::InvalidArgument(format!("cut level {c} outside (0,1]")));
    }
    let cuts: Vec<(usize, Vec<usize>, f64)> = fh
        .edges
        .iter()
        .enumerate()
        .filter_map(|(j, e)| {
            let kept: Vec<usize> = e.membership.iter().filter(|&&(_, m)| m >= c).map(|&(i, _)| i).collect();
            (!kept.is_empty()).then_some((j, kept, e.weight))
        })
        .collect();
    let mut used = vec![false; fh.vertices.len()];
    for (_, kept, _) in &cuts {
        for &i in kept {
            used[i] = true;
        }
    }
    let mut remap = vec![usize::MAX; fh.vertices.len()];
    let mut vertices = Vec::new();
    for (i, u) in used.iter().enumerate() {
        if *u {
            remap[i] = vertices.len();
            vertices.push(fh.vertices[i].clone());
        }
    }
    let edges = cuts
        .into_iter()
        .map(|(j, kept, w)| crate::structures::Hyperedge {
            members: kept.into_iter().map(|i| remap[i]).collect(),
            weight: w,
            id: j as u64,
        })
        .collect();
    Hypergraph::with_edges(vertices, edges)
}

/// `(H_f)_{ij} = μ_{A_j}(x_i)`.
pub fn fuzzy_incidence(fh: &FuzzyHypergraph) -> SparseMatrix {
    let triplets = fh
        .edges
        .iter()
        .enumerate()
        .flat_map(|(j, e)| e.membership.iter().map(move |&(i, m)| (i, j, m)));
    SparseMatrix::from_triplets(fh.vertices.len(), fh.edges.len(), triplets)
        .expect("indices validated on construction")
}

/// `I − D_V^{-1/2} H_f W D_E^{-1} H_fᵀ D_V^{-1/2}` with fuzzy degrees.
pub fn fuzzy_laplacian(fh: &FuzzyHypergraph) -> DenseMatrix {
    laplacian_from_incidence(&fuzzy_incidence(fh), &fh.weights()).expect("one weight per edge")
}

/// F-HGNN layer: the spectral convolution with `H_f` in place of `H`.
pub fn fhgnn_convolve(fh: &FuzzyHypergraph, x: &DenseMatrix, p: &LayerParams) -> Result<DenseMatrix> {
    crate::shgnn::check_layer_inputs(fh.vertices.len(), x, p)?;
    let op = PropagatorOperator::from_incidence(&fuzzy_incidence(fh), &p.weights_or(fh.weights())?)?;
    let pre = op.apply(x)?.matmul(&p.theta)?;
    Ok(p.activation.apply_matrix(&pre))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{incidence_matrix, normalized_laplacian, Activation};
    use crate::shgnn::shgnn_convolve;
    use crate::structures::SuperHyperGraph;

    fn names(ns: &[&str]) -> Vec<BaseVertex> {
        ns.iter().map(|n| BaseVertex::new(*n).unwrap()).collect()
    }

    fn single(mu: &[(usize, f64)]) -> FuzzyHypergraph {
        FuzzyHypergraph::new(
            names(&["a", "b"]),
            vec![FuzzyEdge {
                membership: mu.to_vec(),
                weight: 1.0,
            }],
        )
        .unwrap()
    }

    #[test]
    fn cut_threshold() {
        let fh = single(&[(0, 0.9), (1, 0.4)]);
        let h = c_cut(&fh, 0.5).unwrap();
        assert_eq!(h.edge_name_sets(), vec![vec!["a"]]);
        assert_eq!(h.num_vertices(), 1);
        assert!(c_cut(&fh, 0.0).is_err());
        assert!(c_cut(&fh, 1.5).is_err());
        assert_eq!(c_cut(&fh, 0.95).unwrap().num_edges(), 0);
    }

    #[test]
    fn height_is_max_of_maxima() {
        let fh = FuzzyHypergraph::new(
            names(&["a", "b", "c"]),
            vec![
                FuzzyEdge { membership: vec![(0, 0.7), (1, 0.2)], weight: 1.0 },
                FuzzyEdge { membership: vec![(1, 0.9), (2, 0.5)], weight: 1.0 },
            ],
        )
        .unwrap();
        assert_eq!(height(&fh), 0.9);
    }

    #[test]
    fn hand_degrees() {
        let fh = single(&[(0, 1.0), (1, 0.5)]);
        let inc = fuzzy_incidence(&fh);
        let (dv, de) = crate::linalg::degrees_from_incidence(&inc, &fh.weights());
        assert_eq!(dv.diag(), &[1.0, 0.5]);
        assert_eq!(de.diag(), &[1.5]);
        // Propagator entries h_i h_k / (δ sqrt(d_i d_k)).
        let l = fuzzy_laplacian(&fh);
        let p = |hi: f64, hk: f64, di: f64, dk: f64| hi * hk / (1.5 * (di * dk).sqrt());
        assert!((l[(0, 0)] - (1.0 - p(1.0, 1.0, 1.0, 1.0))).abs() < 1e-15);
        assert!((l[(0, 1)] + p(1.0, 0.5, 1.0, 0.5)).abs() < 1e-15);
        assert!((l[(1, 1)] - (1.0 - p(0.5, 0.5, 0.5, 0.5))).abs() < 1e-15);
    }

    #[test]
    fn binary_reduces_to_crisp() {
        let h = Hypergraph::from_names(
            &["a", "b", "c", "d"],
            &[(&["a", "b", "c"], 2.0), (&["c", "d"], 0.5), (&["a", "d"], 1.0)],
        )
        .unwrap();
        let fh = FuzzyHypergraph::from_crisp(&h);
        assert_eq!(fuzzy_incidence(&fh), incidence_matrix(&h));
        assert_eq!(fuzzy_laplacian(&fh), normalized_laplacian(&h));
        for c in [0.1, 0.5, 1.0] {
            assert_eq!(c_cut(&fh, c).unwrap().edge_name_sets(), h.edge_name_sets());
        }
        let x = DenseMatrix::from_fn(4, 2, |i, j| i as f64 - j as f64 * 0.5);
        let p = LayerParams::new(DenseMatrix::from_fn(2, 3, |i, j| (i + 2 * j) as f64 * 0.1 - 0.2), Activation::Relu);
        let shg = SuperHyperGraph::from_hypergraph(&h, 1).unwrap();
        assert_eq!(fhgnn_convolve(&fh, &x, &p).unwrap(), shgnn_convolve(&shg, &x, &p).unwrap());
    }

    #[test]
    fn strict_covering() {
        let fh = single(&[(0, 0.3), (1, 0.0)]);
        assert!(fh.validate(false).is_valid());
        assert_eq!(fh.validate(true).len(), 1);
    }

    #[test]
    fn rejects_bad_membership() {
        assert!(FuzzyHypergraph::new(names(&["a"]), vec![FuzzyEdge { membership: vec![(0, 1.2)], weight: 1.0 }]).is_err());
        assert!(FuzzyHypergraph::new(names(&["a"]), vec![FuzzyEdge { membership: vec![(0, 0.2), (0, 0.3)], weight: 1.0 }]).is_err());
    }
}
