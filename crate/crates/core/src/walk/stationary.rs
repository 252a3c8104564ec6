use super::kernel::TransitionKernel;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ITERS: usize = 1_000_000;

fn support(k: &TransitionKernel) -> Vec<Vec<usize>> {
    let p = k.matrix();
    (0..p.rows())
        .map(|i| (0..p.cols()).filter(|&j| p[(i, j)] > 0.0).collect())
        .collect()
}

/// Strongly connected components of the positive-entry digraph (Tarjan,
/// iterative). Returns a component label per state.
pub fn strong_components(k: &TransitionKernel) -> Vec<usize> {
    let adj = support(k);
    let n = adj.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next = 0;
    let mut ncomp = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < adj[v].len() {
                let w = adj[v][*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("non-empty stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    comp
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Period of an irreducible chain: gcd over support arcs `u → v` of
/// `level(u) + 1 − level(v)` with BFS levels from state 0.
pub fn period(k: &TransitionKernel) -> usize {
    let adj = support(k);
    let n = adj.len();
    if n == 0 {
        return 1;
    }
    let mut level = vec![usize::MAX; n];
    level[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let mut g = 0;
    for u in 0..n {
        if level[u] == usize::MAX {
            continue;
        }
        for &v in &adj[u] {
            let diff = (level[u] + 1).abs_diff(level[v]);
            g = gcd(g, diff);
        }
    }
    g.max(1)
}

/// `‖π P − π‖₁`.
pub fn residual(k: &TransitionKernel, pi: &[f64]) -> f64 {
    let next = k.matrix().vec_mul(pi).expect("length matches");
    next.iter().zip(pi).map(|(a, b)| (a - b).abs()).sum()
}

/// Stationary distribution by power iteration from the uniform vector, after
/// checking irreducibility and aperiodicity.
pub fn stationary(k: &TransitionKernel, tol: f64) -> Result<Vec<f64>> {
    stationary_with_limit(k, tol, DEFAULT_MAX_ITERS)
}

pub fn stationary_with_limit(k: &TransitionKernel, tol: f64, max_iters: usize) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance {tol} must be positive")));
    }
    let n = k.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty state space".into()));
    }
    let comps = strong_components(k).into_iter().max().map_or(0, |m| m + 1);
    if comps > 1 {
        return Err(Error::Reducible(comps));
    }
    let d = period(k);
    if d > 1 {
        return Err(Error::Periodic(d));
    }
    let mut pi = vec![1.0 / n as f64; n];
    for _ in 0..max_iters {
        let mut next = k.matrix().vec_mul(&pi)?;
        let s: f64 = next.iter().sum();
        next.iter_mut().for_each(|x| *x /= s);
        pi = next;
        if residual(k, &pi) <= tol {
            return Ok(pi);
        }
    }
    Err(Error::NotConverged { tol, iters: max_iters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DenseMatrix;

    fn kernel(rows: &[[f64; 2]]) -> TransitionKernel {
        TransitionKernel::new(vec!["a".into(), "b".into()], DenseMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn weather_chain() {
        let pi = stationary(&kernel(&[[0.9, 0.1], [0.5, 0.5]]), 1e-14).unwrap();
        assert!((pi[0] - 5.0 / 6.0).abs() < 1e-10);
        assert!((pi[1] - 1.0 / 6.0).abs() < 1e-10);
    }

    #[test]
    fn symmetric_chain() {
        let pi = stationary(&kernel(&[[0.5, 0.5], [0.5, 0.5]]), 1e-14).unwrap();
        assert_eq!(pi, vec![0.5, 0.5]);
    }

    #[test]
    fn reducible_and_periodic() {
        assert!(matches!(stationary(&kernel(&[[1.0, 0.0], [0.5, 0.5]]), 1e-12), Err(Error::Reducible(2))));
        assert!(matches!(stationary(&kernel(&[[0.0, 1.0], [1.0, 0.0]]), 1e-12), Err(Error::Periodic(2))));
    }

    #[test]
    fn components_of_cycle_and_tail() {
        let k = TransitionKernel::new(
            vec!["a".into(), "b".into(), "c".into()],
            DenseMatrix::from_rows(&[[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.5, 0.0, 0.5]]).unwrap(),
        )
        .unwrap();
        let c = strong_components(&k);
        assert_eq!(c[0], c[1]);
        assert_ne!(c[0], c[2]);
    }
}
