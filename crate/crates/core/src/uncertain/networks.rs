use super::membership::{appurtenance_grade, AnnotatedGraph, Annotations};
use super::rules::{rule_network_hidden, Grades, RuleLayer, RuleSet};
use crate::error::{Error, Result};
use crate::linalg::{softmax_rows, DenseMatrix};

/// Scalar grades for fuzzy, neutrosophic and plithogenic annotations.
/// Fuzzy: `μ`. Neutrosophic: `t(1−i)(1−f)`. Plithogenic: the product-form
/// appurtenance grade, with edge discount `1 − mean contradiction` between
/// the endpoints' attribute values.
pub fn grades(g: &AnnotatedGraph) -> Result<Grades> {
    let ends = (0..g.graph().num_edges()).map(|j| g.endpoints(j));
    Ok(match g.annotations() {
        Annotations::Fuzzy { vertices, edges } => Grades {
            vertex: vertices.iter().map(|m| m.mu).collect(),
            edges: ends.zip(edges).map(|((u, v), e)| (u, v, e.mu, 1.0)).collect(),
        },
        Annotations::Neutrosophic { vertices, edges } => Grades {
            vertex: vertices.iter().map(|m| m.grade()).collect(),
            edges: ends.zip(edges).map(|((u, v), e)| (u, v, e.grade(), 1.0)).collect(),
        },
        Annotations::Plithogenic { context, vertices, edges } => Grades {
            vertex: vertices.iter().map(|m| appurtenance_grade(&m.daf)).collect(),
            edges: ends
                .zip(edges)
                .map(|((u, v), e)| {
                    let delta = context.mean_contradiction(vertices[u].attribute, vertices[v].attribute);
                    (u, v, appurtenance_grade(&e.daf), 1.0 - delta)
                })
                .collect(),
        },
        other => {
            return Err(Error::InvalidArgument(format!(
                "no forward pass for {} annotations",
                other.kind_name()
            )))
        }
    })
}

fn expect_kind(g: &AnnotatedGraph, kind: &str) -> Result<()> {
    if g.annotations().kind_name() == kind {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "expected {kind} annotations, got {}",
            g.annotations().kind_name()
        )))
    }
}

fn run(g: &AnnotatedGraph, x: &DenseMatrix, rules: &RuleSet, layers: &[RuleLayer]) -> Result<DenseMatrix> {
    Ok(softmax_rows(&rule_network_hidden(&grades(g)?, x, rules, layers)?))
}

/// Fuzzy graph network: rule layers followed by a row softmax.
pub fn fgnn_forward(g: &AnnotatedGraph, x: &DenseMatrix, rules: &RuleSet, layers: &[RuleLayer]) -> Result<DenseMatrix> {
    expect_kind(g, "fuzzy")?;
    run(g, x, rules, layers)
}

/// Neutrosophic graph network; triplets `(μ, 0, 0)` reproduce
/// [`fgnn_forward`] with memberships `μ` exactly.
pub fn ngnn_forward(g: &AnnotatedGraph, x: &DenseMatrix, rules: &RuleSet, layers: &[RuleLayer]) -> Result<DenseMatrix> {
    expect_kind(g, "neutrosophic")?;
    run(g, x, rules, layers)
}

/// Plithogenic graph network: `L = layers.len()` rounds of
/// `m_v = Σ γ_uv H_u`, `H_v ← σ(f_θ(H_v, m_v))`, then a row softmax.
/// With `(t, i, f)`-shaped appurtenance and zero contradiction this equals
/// [`ngnn_forward`].
pub fn pgnn_forward(g: &AnnotatedGraph, x: &DenseMatrix, rules: &RuleSet, layers: &[RuleLayer]) -> Result<DenseMatrix> {
    expect_kind(g, "plithogenic")?;
    run(g, x, rules, layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Activation;
    use crate::structures::Hypergraph;
    use crate::uncertain::membership::*;
    use crate::uncertain::rules::{Consequent, MembershipFunction, Rule};

    fn triangle() -> Hypergraph {
        Hypergraph::from_names(&["a", "b", "c"], &[(&["a", "b"], 1.0), (&["b", "c"], 1.0), (&["a", "c"], 1.0)]).unwrap()
    }

    fn layer(d: usize, s: f64) -> RuleLayer {
        RuleLayer {
            consequents: vec![
                Consequent {
                    w: DenseMatrix::from_fn(d, d, |i, j| s * (i as f64 - j as f64 + 0.5)),
                    u: DenseMatrix::from_fn(d, d, |i, j| 0.3 * (i + j) as f64 - s),
                    b: (0..d).map(|o| 0.1 * o as f64).collect(),
                },
                Consequent::identity(d),
            ],
            activation: Activation::LeakyRelu(0.1),
            residual: true,
        }
    }

    fn rules() -> RuleSet {
        RuleSet::new(vec![
            Rule {
                vertex: MembershipFunction::Triangular { a: 0.0, b: 0.4, c: 1.0 },
                neighbor: MembershipFunction::Gaussian { mean: 0.7, sigma: 0.3 },
            },
            Rule::always(),
        ])
        .unwrap()
    }

    #[test]
    fn reduction_chain_is_exact() {
        let mus = [0.9, 0.35, 0.6];
        let emus = [0.8, 0.25, 0.5];
        let f = |m| FuzzyMembership::new(m).unwrap();
        let n = |m| NeutrosophicTriplet::new(m, 0.0, 0.0).unwrap();
        let fuzzy = AnnotatedGraph::new(
            triangle(),
            Annotations::Fuzzy { vertices: mus.map(f).to_vec(), edges: emus.map(f).to_vec() },
        )
        .unwrap();
        let neutro = AnnotatedGraph::new(
            triangle(),
            Annotations::Neutrosophic { vertices: mus.map(n).to_vec(), edges: emus.map(n).to_vec() },
        )
        .unwrap();
        let plith = AnnotatedGraph::new(
            triangle(),
            Annotations::Plithogenic {
                context: PlithogenicContext::trivial(2),
                vertices: mus.iter().map(|&m| PlithogenicVertex { attribute: 0, daf: vec![m, 0.0, 0.0] }).collect(),
                edges: emus.iter().map(|&m| PlithogenicEdge { daf: vec![m, 0.0, 0.0] }).collect(),
            },
        )
        .unwrap();
        let x = DenseMatrix::from_fn(3, 2, |i, j| (i as f64 + 1.0) * if j == 0 { 1.0 } else { -0.5 });
        let ls = [layer(2, 0.2), layer(2, -0.1)];
        let yf = fgnn_forward(&fuzzy, &x, &rules(), &ls).unwrap();
        let yn = ngnn_forward(&neutro, &x, &rules(), &ls).unwrap();
        let yp = pgnn_forward(&plith, &x, &rules(), &ls).unwrap();
        assert_eq!(yf, yn);
        assert_eq!(yn, yp);
        for i in 0..3 {
            assert!((yf.row(i).iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn isolated_vertex_receives_zero_message() {
        let g = AnnotatedGraph::new(
            Hypergraph::from_names(&["a"], &[]).unwrap(),
            Annotations::Plithogenic {
                context: PlithogenicContext::trivial(1),
                vertices: vec![PlithogenicVertex { attribute: 0, daf: vec![0.7] }],
                edges: vec![],
            },
        )
        .unwrap();
        let x = DenseMatrix::from_rows(&[[0.2, -0.4]]).unwrap();
        let c = Consequent {
            w: DenseMatrix::from_rows(&[[1.0, 2.0], [0.5, -1.0]]).unwrap(),
            u: DenseMatrix::filled(2, 2, 9.0),
            b: vec![0.1, 0.0],
        };
        let pre = x.matmul(&c.w).unwrap().add(&DenseMatrix::from_rows(&[[0.1, 0.0]]).unwrap()).unwrap();
        let l = RuleLayer { consequents: vec![c], activation: Activation::Relu, residual: false };
        let y = pgnn_forward(&g, &x, &RuleSet::single(), &[l]).unwrap();
        assert_eq!(y, softmax_rows(&Activation::Relu.apply_matrix(&pre)));
    }

    #[test]
    fn contradiction_discounts_messages() {
        let ctx = PlithogenicContext::new(
            vec!["p".into(), "q".into()],
            vec![vec![vec![0.0, 0.0], vec![0.2, 0.6]], vec![vec![0.2, 0.6], vec![0.0, 0.0]]],
        );
        let g = AnnotatedGraph::new(
            Hypergraph::from_names(&["a", "b"], &[(&["a", "b"], 1.0)]).unwrap(),
            Annotations::Plithogenic {
                context: ctx,
                vertices: vec![
                    PlithogenicVertex { attribute: 0, daf: vec![0.9, 0.5] },
                    PlithogenicVertex { attribute: 1, daf: vec![1.0, 0.0] },
                ],
                edges: vec![PlithogenicEdge { daf: vec![0.8, 0.25] }],
            },
        )
        .unwrap();
        let gr = grades(&g).unwrap();
        assert_eq!(gr.vertex, vec![0.45, 1.0]);
        assert_eq!(gr.edges, vec![(0, 1, 0.8 * 0.75, 1.0 - 0.4)]);
    }

    #[test]
    fn kind_mismatch_rejected() {
        let f = |m| FuzzyMembership::new(m).unwrap();
        let g = AnnotatedGraph::new(
            Hypergraph::from_names(&["a", "b"], &[(&["a", "b"], 1.0)]).unwrap(),
            Annotations::Fuzzy { vertices: vec![f(1.0); 2], edges: vec![f(1.0)] },
        )
        .unwrap();
        let x = DenseMatrix::zeros(2, 1);
        assert!(ngnn_forward(&g, &x, &RuleSet::single(), &[]).is_err());
        assert!(fgnn_forward(&g, &x, &RuleSet::single(), &[]).is_ok());
    }
}
