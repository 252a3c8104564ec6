mod common;

use common::uncertain as u;
use proptest::prelude::*;
use rand::Rng;
use superhyper::linalg::{incidence_matrix, normalized_laplacian, Activation};
use superhyper::shgnn::{hgnn_convolve, LayerParams};
use superhyper::structures::Hypergraph;
use superhyper::uncertain::{
    c_cut, fgnn_forward, fhgnn_convolve, fuzzy_incidence, fuzzy_laplacian, grades, height, ngnn_forward,
    pgnn_forward, FuzzyEdge, FuzzyHypergraph,
};

fn binary_fuzzy(rng: &mut rand_chacha::ChaCha8Rng, h: &Hypergraph) -> FuzzyHypergraph {
    let edges = h
        .hyperedges()
        .iter()
        .map(|e| FuzzyEdge {
            membership: (0..h.num_vertices())
                .filter(|v| e.members.contains(v) || rng.random_bool(0.3))
                .map(|v| (v, if e.members.contains(&v) { 1.0 } else { 0.0 }))
                .collect(),
            weight: e.weight,
        })
        .collect();
    FuzzyHypergraph::new(h.vertices().to_vec(), edges).unwrap()
}

proptest! {
    #[test]
    fn binary_memberships_match_crisp(seed in any::<u64>(), n in 1usize..12, m in 0usize..10) {
        let mut rng = common::rng(seed);
        let h = common::random_hypergraph(&mut rng, n, m, 4);
        let fh = binary_fuzzy(&mut rng, &h);
        prop_assert!(fuzzy_incidence(&fh).to_dense().max_abs_diff(&incidence_matrix(&h).to_dense()) <= 1e-12);
        prop_assert!(fuzzy_laplacian(&fh).max_abs_diff(&normalized_laplacian(&h)) <= 1e-12);
        let x = common::random_features(&mut rng, n, 3);
        let p = LayerParams::new(common::random_features(&mut rng, 3, 2), Activation::Relu);
        prop_assert!(fhgnn_convolve(&fh, &x, &p).unwrap().max_abs_diff(&hgnn_convolve(&h, &x, &p).unwrap()) <= 1e-12);
    }

    #[test]
    fn uncertain_networks_reduce(seed in any::<u64>(), n in 2usize..10, m in 1usize..15) {
        let mut rng = common::rng(seed);
        let g = common::random_simple_graph(&mut rng, n, m);
        let x = u::features(&mut rng, n, 3);
        let layers = u::layers(&mut rng, 3, 2);
        let rules = u::rules();

        let t = u::triplets(&mut rng, &g, false);
        let neutro = ngnn_forward(&u::neutrosophic(&g, &t), &x, &rules, &layers).unwrap();
        let plith = pgnn_forward(&u::plithogenic_zero_contradiction(&mut rng, &g, &t), &x, &rules, &layers).unwrap();
        prop_assert!(plith.max_abs_diff(&neutro) <= 1e-12);

        let t0 = u::triplets(&mut rng, &g, true);
        let neutro0 = ngnn_forward(&u::neutrosophic(&g, &t0), &x, &rules, &layers).unwrap();
        let fuzzy = fgnn_forward(&u::fuzzy(&g, &t0), &x, &rules, &layers).unwrap();
        prop_assert!(neutro0.max_abs_diff(&fuzzy) <= 1e-12);
        for i in 0..n {
            prop_assert!((fuzzy.row(i).iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn firing_strengths_are_normalized(seed in any::<u64>(), n in 2usize..10, m in 0usize..12) {
        let mut rng = common::rng(seed);
        let g = common::random_simple_graph(&mut rng, n, m);
        let t = u::triplets(&mut rng, &g, false);
        let r = grades(&u::neutrosophic(&g, &t)).unwrap().firing_strengths(&u::rules());
        for i in 0..n {
            prop_assert!(r.row(i).iter().all(|&x| x >= 0.0));
            prop_assert!((r.row(i).iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        }
    }
}

fn sample_fuzzy() -> FuzzyHypergraph {
    let doc = superhyper::io::load(common::data_path("fuzzy_hypergraph.json"), true).unwrap().document;
    doc.fuzzy_hypergraph(true).unwrap().unwrap()
}

#[test]
fn cuts_and_height() {
    let fh = sample_fuzzy();
    assert_eq!(height(&fh), 1.0);
    let names = |c: f64| c_cut(&fh, c).unwrap().edge_name_sets().iter().map(|e| e.join("")).collect::<Vec<_>>();
    assert_eq!(names(0.25), ["abc", "cd"]);
    assert_eq!(names(0.5), ["ab", "cd"]);
    assert_eq!(names(1.0), ["a", "d"]);
}

#[test]
fn neutrosophic_grade_oracle() {
    let g = Hypergraph::from_names(&["a", "b"], &[(&["a", "b"], 1.0)]).unwrap();
    let t = (vec![[0.8, 0.5, 0.5], [1.0, 0.0, 0.0]], vec![[0.5, 0.0, 0.5]]);
    let gr = grades(&u::neutrosophic(&g, &t)).unwrap();
    assert_eq!(gr.vertex, [0.2, 1.0]);
    assert_eq!(gr.edges, [(0, 1, 0.25, 1.0)]);
}

#[test]
fn isolated_vertices_fire_uniformly() {
    let g = Hypergraph::from_names(&["a", "b", "c"], &[(&["a", "b"], 1.0)]).unwrap();
    let t = (vec![[0.5, 0.0, 0.0]; 3], vec![[0.5, 0.0, 0.0]]);
    let r = grades(&u::fuzzy(&g, &t)).unwrap().firing_strengths(&u::rules());
    assert_eq!(r.row(2), [1.0 / 3.0; 3]);
}
