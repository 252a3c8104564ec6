use proptest::prelude::*;
use superhyper::combinatorics::{
    binomial, contains_pattern, subsets, turan_density_estimate, turan_number, DecisionTree, UniformHypergraph,
};

fn injections(n: usize, m: usize, prefix: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if prefix.len() == m {
        return visit(prefix);
    }
    for v in 0..n {
        if !prefix.contains(&v) {
            prefix.push(v);
            let found = injections(n, m, prefix, visit);
            prefix.pop();
            if found {
                return true;
            }
        }
    }
    false
}

fn naive_contains(g: &UniformHypergraph, f: &UniformHypergraph) -> bool {
    if f.num_vertices() > g.num_vertices() {
        return false;
    }
    injections(g.num_vertices(), f.num_vertices(), &mut Vec::new(), &mut |map| {
        f.edges().iter().all(|e| {
            let mut image: Vec<usize> = e.iter().map(|&v| map[v]).collect();
            image.sort_unstable();
            g.has_edge(&image)
        })
    })
}

fn uniform(n: usize, r: usize, mask: u64) -> UniformHypergraph {
    let edges = subsets(n, r).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
    UniformHypergraph::new(n, r, edges).unwrap()
}

fn triangle() -> UniformHypergraph {
    UniformHypergraph::complete(3, 2).unwrap()
}

proptest! {
    #[test]
    fn containment_agrees_with_naive_search(
        gn in 2usize..8, fn_ in 2usize..5, r in 2usize..4, gmask in any::<u64>(), fmask in any::<u64>()
    ) {
        prop_assume!(r <= fn_ && r <= gn);
        let g = uniform(gn, r, gmask);
        let f = uniform(fn_, r, fmask);
        prop_assume!(f.num_edges() > 0);
        prop_assert_eq!(contains_pattern(&g, &f).unwrap(), naive_contains(&g, &f));
    }

    #[test]
    fn decision_tree_reproduces_truth_table(
        (m, table) in (0usize..9).prop_flat_map(|m| (Just(m), prop::collection::vec(any::<bool>(), 1 << m))),
        shift in 0usize..9,
    ) {
        let mut order: Vec<usize> = (0..m).collect();
        order.rotate_left(if m == 0 { 0 } else { shift % m });
        let tree = DecisionTree::build(&table, &order).unwrap();
        prop_assert_eq!(tree.leaves().len(), table.len());
        for (idx, want) in table.iter().enumerate() {
            let a: Vec<bool> = (0..m).map(|v| idx >> (m - 1 - v) & 1 == 1).collect();
            prop_assert_eq!(tree.evaluate(&a).unwrap(), *want);
        }
    }
}

#[test]
fn mantel_values_with_maximal_witnesses() {
    let k3 = triangle();
    let mut previous = 0;
    for (n, want) in [(3, 2), (4, 4), (5, 6), (6, 9)] {
        let t = turan_number(n, 2, &k3).unwrap();
        assert_eq!(t.ex, want);
        assert_eq!(t.ex, n * n / 4);
        assert!(t.ex >= previous);
        previous = t.ex;
        assert_eq!(t.witness.num_edges(), t.ex);
        assert!(!contains_pattern(&t.witness, &k3).unwrap());
        for e in subsets(n, 2).into_iter().filter(|e| !t.witness.has_edge(e)) {
            assert!(contains_pattern(&t.witness.with_edge(e).unwrap(), &k3).unwrap());
        }
    }
}

#[test]
fn single_edge_pattern_forbids_everything() {
    let f = UniformHypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
    for n in 3..7 {
        assert_eq!(turan_number(n, 3, &f).unwrap().ex, 0);
    }
    let d = turan_density_estimate(3, &f, 3..=5).unwrap();
    assert!(d.points.iter().all(|p| p.ratio == 0.0));
}

#[test]
fn triangle_density_prefix() {
    let d = turan_density_estimate(2, &triangle(), 3..=6).unwrap();
    let ratios: Vec<f64> = d.points.iter().map(|p| p.ratio).collect();
    assert_eq!(ratios, [2.0 / 3.0, 4.0 / 6.0, 6.0 / 10.0, 9.0 / 15.0]);
    assert!(d.non_increasing);
}

#[test]
fn guard_rejects_large_instances() {
    assert!(turan_number(10, 2, &triangle()).is_err());
    assert!(turan_number(8, 3, &UniformHypergraph::complete(4, 3).unwrap()).is_err());
    assert_eq!(binomial(9, 2), 36);
}

#[test]
fn and_tree() {
    let tree = DecisionTree::build(&[false, false, false, true], &[0, 1]).unwrap();
    assert_eq!(tree.leaves(), [false, false, false, true]);
    assert!(DecisionTree::build(&[false, true, true], &[0, 1]).is_err());
    let zero = DecisionTree::build(&[false; 4], &[1, 0]).unwrap();
    assert_eq!(zero.leaves(), [false; 4]);
}

#[test]
fn containment_examples() {
    let k4 = UniformHypergraph::complete(4, 2).unwrap();
    assert!(contains_pattern(&k4, &triangle()).unwrap());
    assert!(contains_pattern(&triangle(), &triangle()).unwrap());
    let edge = UniformHypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
    assert!(!contains_pattern(&UniformHypergraph::new(4, 2, vec![]).unwrap(), &edge).unwrap());
}
