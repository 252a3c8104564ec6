mod common;

use proptest::prelude::*;
use superhyper::linalg::DenseMatrix;
use superhyper::walk::{
    residual, shg_transition_kernel, simulate, stationary, transition_kernel, DanglingPolicy, Selection,
    TransitionKernel, WalkConfig,
};

proptest! {
    #[test]
    fn kernel_rows_are_stochastic(seed in any::<u64>(), n in 1usize..15, m in 0usize..12) {
        let h = common::random_hypergraph(&mut common::rng(seed), n, m, 5);
        let k = transition_kernel(&h, &Selection::Uniform, DanglingPolicy::Lazy).unwrap();
        for i in 0..n {
            let row = k.matrix().row(i);
            prop_assert!(row.iter().all(|&p| p >= 0.0));
            prop_assert!((row.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn singleton_supervertex_walk_matches_hypergraph_walk(seed in any::<u64>(), n in 1usize..12, m in 0usize..10) {
        let h = common::random_hypergraph(&mut common::rng(seed), n, m, 4);
        let flat = transition_kernel(&h, &Selection::Uniform, DanglingPolicy::Lazy).unwrap();
        let lifted = shg_transition_kernel(&common::singleton_lift(&h), &Selection::Uniform, DanglingPolicy::Lazy).unwrap();
        prop_assert!(flat.matrix().max_abs_diff(lifted.matrix()) <= 1e-12);
    }

    #[test]
    fn walks_follow_positive_transitions(seed in any::<u64>(), steps in 0usize..40) {
        let h = common::covering_hypergraph(&mut common::rng(seed), 8, 5, 4);
        let k = transition_kernel(&h, &Selection::Uniform, DanglingPolicy::Error).unwrap();
        let path = simulate(&k, &WalkConfig { start: 0, steps, seed }).unwrap();
        prop_assert_eq!(path.len(), steps + 1);
        for w in path.windows(2) {
            prop_assert!(k.matrix()[(w[0], w[1])] > 0.0);
        }
        prop_assert_eq!(simulate(&k, &WalkConfig { start: 0, steps, seed }).unwrap(), path);
    }
}

#[test]
fn weather_chain() {
    let p = DenseMatrix::from_rows(&[[0.9, 0.1], [0.5, 0.5]]).unwrap();
    let k = TransitionKernel::new(vec!["sunny".into(), "rainy".into()], p).unwrap();
    let pi = stationary(&k, 1e-14).unwrap();
    assert!((pi[0] - 5.0 / 6.0).abs() <= 1e-10);
    assert!((pi[1] - 1.0 / 6.0).abs() <= 1e-10);
    assert!(residual(&k, &pi) <= 1e-10);
}

#[test]
fn worked_example_kernel() {
    let k = transition_kernel(&common::worked_example().expand(), &Selection::Uniform, DanglingPolicy::Error).unwrap();
    let want = DenseMatrix::from_rows(&[
        [5.0 / 12.0, 1.0 / 6.0, 5.0 / 12.0],
        [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0],
        [5.0 / 12.0, 1.0 / 6.0, 5.0 / 12.0],
    ])
    .unwrap();
    assert!(k.matrix().max_abs_diff(&want) <= 1e-15);
    let pi = stationary(&k, 1e-14).unwrap();
    assert!((pi[0] - 0.4).abs() <= 1e-10 && (pi[1] - 0.2).abs() <= 1e-10);
}

#[test]
fn dangling_vertex_is_rejected_unless_lazy() {
    let h = superhyper::structures::Hypergraph::from_names(&["a", "b", "c"], &[(&["a", "b"], 1.0)]).unwrap();
    assert!(transition_kernel(&h, &Selection::Uniform, DanglingPolicy::Error).is_err());
    let k = transition_kernel(&h, &Selection::Uniform, DanglingPolicy::Lazy).unwrap();
    assert_eq!(k.matrix().row(2), [0.0, 0.0, 1.0]);
}

#[test]
fn zero_steps_returns_start() {
    let k = transition_kernel(&common::worked_example().expand(), &Selection::Uniform, DanglingPolicy::Error).unwrap();
    assert_eq!(simulate(&k, &WalkConfig { start: 1, steps: 0, seed: 1 }).unwrap(), vec![1]);
}
