#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use superhyper::linalg::DenseMatrix;
use superhyper::rng::seeded;
use superhyper::structures::{BaseVertex, Hypergraph, NestedElement, SuperHyperGraph, Superedge};

pub fn rng(seed: u64) -> ChaCha8Rng {
    seeded(seed)
}

pub fn names(n: usize) -> Vec<BaseVertex> {
    (0..n).map(|i| BaseVertex::new(format!("v{i}")).unwrap()).collect()
}

/// `m` random edges of 1..=max_size distinct members with weights in [0.5, 2).
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize, max_size: usize) -> Hypergraph {
    let edges = (0..m)
        .map(|_| {
            let size = rng.random_range(1..=max_size.min(n));
            let mut members: Vec<usize> = (0..n).collect();
            for i in 0..size {
                let j = rng.random_range(i..n);
                members.swap(i, j);
            }
            members.truncate(size);
            (members, rng.random_range(0.5..2.0))
        })
        .collect();
    Hypergraph::new(names(n), edges).unwrap()
}

/// Random hypergraph plus a pair edge for every vertex left uncovered, so
/// that every degree is positive.
pub fn covering_hypergraph(rng: &mut ChaCha8Rng, n: usize, m: usize, max_size: usize) -> Hypergraph {
    let h = random_hypergraph(rng, n, m, max_size);
    let mut seen = vec![false; n];
    let mut edges: Vec<(Vec<usize>, f64)> = h
        .hyperedges()
        .iter()
        .map(|e| {
            e.members.iter().for_each(|&v| seen[v] = true);
            (e.members.clone(), e.weight)
        })
        .collect();
    for v in (0..n).filter(|&v| !seen[v]) {
        let partner = rng.random_range(0..n);
        edges.push((vec![v, partner], rng.random_range(0.5..2.0)));
    }
    Hypergraph::new(names(n), edges).unwrap()
}

/// Simple graph with distinct endpoint pairs.
pub fn random_simple_graph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Hypergraph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let m = m.min(pairs.len());
    for i in 0..m {
        let j = rng.random_range(i..pairs.len());
        pairs.swap(i, j);
    }
    let edges = pairs[..m].iter().map(|&(a, b)| (vec![a, b], rng.random_range(0.5..2.0))).collect();
    Hypergraph::new(names(n), edges).unwrap()
}

pub fn random_features(rng: &mut ChaCha8Rng, n: usize, d: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, d, |_, _| rng.random_range(-1.0..1.0))
}

/// Level-1 graph whose supervertices are the singletons `{v}`.
pub fn singleton_lift(h: &Hypergraph) -> SuperHyperGraph {
    let single = |i: usize| NestedElement::set([NestedElement::Leaf(h.vertices()[i].clone())]);
    let supervertices = (0..h.num_vertices()).map(single).collect();
    let superedges = h
        .hyperedges()
        .iter()
        .map(|e| Superedge::new(e.members.iter().map(|&i| single(i)).collect(), e.weight, e.id))
        .collect();
    SuperHyperGraph::new(h.vertices().to_vec(), 1, supervertices, superedges).unwrap()
}

pub fn worked_example() -> SuperHyperGraph {
    let base = ["x1", "x2", "x3"].iter().map(|s| BaseVertex::new(*s).unwrap()).collect();
    let sv = vec![
        NestedElement::leaves(["x1", "x2"]),
        NestedElement::leaves(["x3"]),
        NestedElement::leaves(["x1"]),
    ];
    let edges = vec![
        Superedge::new(vec![NestedElement::leaves(["x1", "x2"]), NestedElement::leaves(["x3"])], 1.0, 0),
        Superedge::new(vec![NestedElement::leaves(["x1"]), NestedElement::leaves(["x3"])], 1.0, 1),
    ];
    SuperHyperGraph::new(base, 1, sv, edges).unwrap()
}

pub fn data_path(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub mod uncertain {
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;
    use superhyper::linalg::{Activation, DenseMatrix};
    use superhyper::structures::Hypergraph;
    use superhyper::uncertain::{
        AnnotatedGraph, Annotations, Consequent, FuzzyMembership, MembershipFunction, NeutrosophicTriplet,
        PlithogenicContext, PlithogenicEdge, PlithogenicVertex, Rule, RuleLayer, RuleSet,
    };

    pub fn rules() -> RuleSet {
        RuleSet::new(vec![
            Rule {
                vertex: MembershipFunction::Triangular { a: 0.0, b: 0.5, c: 1.0 },
                neighbor: MembershipFunction::Gaussian { mean: 0.6, sigma: 0.3 },
            },
            Rule {
                vertex: MembershipFunction::Trapezoid { a: 0.2, b: 0.4, c: 0.8, d: 1.0 },
                neighbor: MembershipFunction::One,
            },
            Rule::always(),
        ])
        .unwrap()
    }

    pub fn layers(rng: &mut ChaCha8Rng, d: usize, count: usize) -> Vec<RuleLayer> {
        (0..count)
            .map(|l| RuleLayer {
                consequents: (0..3)
                    .map(|_| Consequent {
                        w: super::random_features(rng, d, d),
                        u: super::random_features(rng, d, d),
                        b: (0..d).map(|_| rng.random_range(-0.5..0.5)).collect(),
                    })
                    .collect(),
                activation: Activation::LeakyRelu(0.1),
                residual: l % 2 == 1,
            })
            .collect()
    }

    /// `(t, i, f)` per vertex and edge, with every edge component at most the
    /// smaller endpoint component.
    pub fn triplets(rng: &mut ChaCha8Rng, g: &Hypergraph, zero_if: bool) -> (Vec<[f64; 3]>, Vec<[f64; 3]>) {
        let draw = |rng: &mut ChaCha8Rng| if zero_if { 0.0 } else { rng.random_range(0.0..1.0) };
        let vertices: Vec<[f64; 3]> = (0..g.num_vertices())
            .map(|_| [rng.random_range(0.0..1.0), draw(rng), draw(rng)])
            .collect();
        let edges = g
            .hyperedges()
            .iter()
            .map(|e| {
                let (u, v) = (e.members[0], e.members[1]);
                let s: f64 = rng.random_range(0.0..1.0);
                [0, 1, 2].map(|c| s * vertices[u][c].min(vertices[v][c]))
            })
            .collect();
        (vertices, edges)
    }

    pub fn neutrosophic(g: &Hypergraph, t: &(Vec<[f64; 3]>, Vec<[f64; 3]>)) -> AnnotatedGraph {
        let tri = |a: &[f64; 3]| NeutrosophicTriplet::new(a[0], a[1], a[2]).unwrap();
        let ann = Annotations::Neutrosophic {
            vertices: t.0.iter().map(tri).collect(),
            edges: t.1.iter().map(tri).collect(),
        };
        AnnotatedGraph::new(g.clone(), ann).unwrap()
    }

    pub fn fuzzy(g: &Hypergraph, t: &(Vec<[f64; 3]>, Vec<[f64; 3]>)) -> AnnotatedGraph {
        let mu = |a: &[f64; 3]| FuzzyMembership::new(a[0]).unwrap();
        let ann = Annotations::Fuzzy {
            vertices: t.0.iter().map(mu).collect(),
            edges: t.1.iter().map(mu).collect(),
        };
        AnnotatedGraph::new(g.clone(), ann).unwrap()
    }

    /// Plithogenic annotation with two attribute values, random vertex
    /// attributes and an all-zero contradiction table.
    pub fn plithogenic_zero_contradiction(
        rng: &mut ChaCha8Rng,
        g: &Hypergraph,
        t: &(Vec<[f64; 3]>, Vec<[f64; 3]>),
    ) -> AnnotatedGraph {
        let context = PlithogenicContext::new(vec!["low".into(), "high".into()], vec![vec![vec![0.0; 3]; 2]; 2]);
        let ann = Annotations::Plithogenic {
            context,
            vertices: t.0.iter().map(|a| PlithogenicVertex { attribute: rng.random_range(0..2), daf: a.to_vec() }).collect(),
            edges: t.1.iter().map(|a| PlithogenicEdge { daf: a.to_vec() }).collect(),
        };
        AnnotatedGraph::new(g.clone(), ann).unwrap()
    }

    pub fn features(rng: &mut ChaCha8Rng, n: usize, d: usize) -> DenseMatrix {
        super::random_features(rng, n, d)
    }
}

pub mod grad {
    use superhyper::linalg::{Activation, DenseMatrix};
    use superhyper::shgnn::{grad_theta, shgnn_convolve, shgnn_pre_activation, LayerParams};

    pub const STEP: f64 = 1e-6;
    /// Pre-activations closer than this to a kink make an instance ineligible.
    pub const KINK_MARGIN: f64 = 1e-3;

    /// Relative Frobenius error between the analytic gradient of
    /// `⟨G, σ(P X Θ)⟩` and central differences, or `None` when some
    /// pre-activation lies within the kink margin.
    pub fn relative_error(seed: u64, activation: Activation) -> Option<f64> {
        let mut rng = super::rng(seed);
        let h = super::covering_hypergraph(&mut rng, 12, 9, 4);
        let shg = super::singleton_lift(&h);
        let x = super::random_features(&mut rng, 12, 4);
        let g = super::random_features(&mut rng, 12, 3);
        let p = LayerParams::new(super::random_features(&mut rng, 4, 3), activation);
        let pre = shgnn_pre_activation(&shg, &x, &p).unwrap();
        if pre.as_slice().iter().any(|z| z.abs() < KINK_MARGIN) {
            return None;
        }
        let analytic = grad_theta(&shg, &x, &p, &g).unwrap();
        let loss = |theta: &DenseMatrix| {
            let q = LayerParams::new(theta.clone(), activation);
            g.dot(&shgnn_convolve(&shg, &x, &q).unwrap()).unwrap()
        };
        let numeric = DenseMatrix::from_fn(p.theta.rows(), p.theta.cols(), |i, j| {
            let mut plus = p.theta.clone();
            plus[(i, j)] += STEP;
            let mut minus = p.theta.clone();
            minus[(i, j)] -= STEP;
            (loss(&plus) - loss(&minus)) / (2.0 * STEP)
        });
        let norm = |m: &DenseMatrix| m.as_slice().iter().map(|v| v * v).sum::<f64>().sqrt();
        let diff = analytic.sub(&numeric).unwrap();
        Some(norm(&diff) / norm(&analytic).max(norm(&numeric)).max(f64::MIN_POSITIVE))
    }
}

pub mod cli {
    /// Runs the command line in-process; returns (exit code, stdout, stderr).
    pub fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("shg").chain(args.iter().copied());
        let code = superhyper::cli::run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    /// One invocation per subcommand over the bundled data files.
    pub fn all_subcommands() -> Vec<Vec<String>> {
        let d = |f: &str| super::data_path(f);
        let worked = d("worked_example.json");
        let f3 = d("features3.csv");
        let theta = d("theta2.csv");
        let lines: Vec<Vec<String>> = vec![
            vec!["validate".into(), worked.clone()],
            vec!["expand".into(), worked.clone()],
            vec!["laplacian".into(), worked.clone()],
            vec!["convolve".into(), worked.clone(), "--features".into(), f3.clone(), "--theta".into(), theta.clone()],
            vec!["forward".into(), worked.clone(), "--features".into(), f3.clone(), "--theta".into(), theta.clone(), "--theta".into(), theta.clone()],
            vec!["attention".into(), worked.clone(), "--features".into(), f3.clone(), "--theta".into(), theta.clone(), "--vector".into(), d("attention2.csv")],
            vec!["dshgnn".into(), "--features".into(), d("features4.csv"), "-s".into(), "2".into(), "-t".into(), "1".into(), "--theta".into(), theta.clone(), "--seed".into(), "5".into()],
            vec!["fgnn".into(), d("fuzzy_path.json"), "--features".into(), f3.clone(), "--model".into(), d("rule_model.json")],
            vec!["ngnn".into(), d("neutrosophic_path.json"), "--features".into(), f3.clone(), "--model".into(), d("rule_model.json")],
            vec!["pgnn".into(), d("plithogenic_path.json"), "--features".into(), f3.clone(), "--model".into(), d("rule_model.json")],
            vec!["fhgnn".into(), d("fuzzy_hypergraph.json"), "--features".into(), d("features4.csv"), "--theta".into(), theta.clone()],
            vec!["ccut".into(), d("fuzzy_hypergraph.json"), "-c".into(), "0.5".into()],
            vec!["walk".into(), worked.clone(), "--start".into(), "x2".into(), "--steps".into(), "25".into(), "--seed".into(), "1".into()],
            vec!["stationary".into(), worked.clone()],
            vec!["partition".into(), d("clustering_example.json"), "-k".into(), "2".into(), "-c".into(), "1.5".into(), "--seed".into(), "7".into()],
            vec!["cluster".into(), d("clustering_example.json"), "-k".into(), "2".into(), "--seed".into(), "7".into()],
            vec!["centrality".into(), d("clustering_example.json")],
            vec!["turan".into(), "-n".into(), "5".into(), "-r".into(), "2".into(), "--pattern".into(), d("triangle.json"), "--from".into(), "3".into()],
            vec!["ffree".into(), d("clustering_example.json"), d("triangle.json")],
            vec!["bdtree".into(), "--table".into(), d("and_table.json"), "--order".into(), "1,0".into()],
        ];
        lines
    }
}

/// Level-1 graph with `s` random non-empty supervertex sets over `n` base
/// vertices and `m` superedges of 1..=3 supervertices each.
pub fn random_level_one(rng: &mut ChaCha8Rng, n: usize, s: usize, m: usize) -> SuperHyperGraph {
    let base = names(n);
    let mut supervertices: Vec<NestedElement> = Vec::new();
    while supervertices.len() < s {
        let size = rng.random_range(1..=n.min(3));
        let members = (0..size).map(|_| NestedElement::Leaf(base[rng.random_range(0..n)].clone()));
        let e = NestedElement::set(members).canonicalize();
        if !supervertices.contains(&e) {
            supervertices.push(e);
        }
    }
    let superedges = (0..m)
        .map(|j| {
            let size = rng.random_range(1..=s.min(3));
            let members = (0..size).map(|_| supervertices[rng.random_range(0..s)].clone()).collect();
            Superedge::new(members, rng.random_range(0.5..2.0), j as u64)
        })
        .collect();
    SuperHyperGraph::new(base, 1, supervertices, superedges).unwrap()
}
