//! Seeded Lloyd k-means with k-means++ initialization.
//!
//! Ties in nearest-center assignment go to the lowest center index. A cluster
//! left empty after an assignment step is re-seeded with the point farthest
//! from its own center (lowest index on ties) taken from a cluster with more
//! than one member.

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::rng::{sample_index, seeded, unit};

pub const DEFAULT_MAX_ITERS: usize = 100;

#[derive(Clone, Debug, PartialEq)]
pub struct KMeansResult {
    /// Cluster index per point.
    pub assignment: Vec<usize>,
    /// One centroid per row.
    pub centroids: DenseMatrix,
    pub iterations: usize,
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn nearest(point: &[f64], centroids: &DenseMatrix) -> usize {
    let mut best = 0;
    let mut best_d = f64::INFINITY;
    for c in 0..centroids.rows() {
        let d = sq_dist(point, centroids.row(c));
        if d < best_d {
            best_d = d;
            best = c;
        }
    }
    best
}

fn plus_plus_init(points: &DenseMatrix, k: usize, seed: u64) -> Vec<usize> {
    let n = points.rows();
    let mut rng = seeded(seed);
    let first = ((unit(&mut rng) * n as f64) as usize).min(n - 1);
    let mut chosen = vec![first];
    let mut d2: Vec<f64> = (0..n)
        .map(|i| sq_dist(points.row(i), points.row(first)))
        .collect();
    while chosen.len() < k {
        let next = match sample_index(&mut rng, &d2) {
            Some(i) => i,
            // Every remaining point coincides with a center.
            None => (0..n).find(|i| !chosen.contains(i)).expect("k <= n"),
        };
        chosen.push(next);
        for (i, d) in d2.iter_mut().enumerate() {
            *d = d.min(sq_dist(points.row(i), points.row(next)));
        }
        d2[next] = 0.0;
    }
    chosen
}

/// Clusters the rows of `points` into `k` non-empty groups.
pub fn kmeans(points: &DenseMatrix, k: usize, max_iters: usize, seed: u64) -> Result<KMeansResult> {
    let n = points.rows();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "k-means needs 1 <= k <= {n} points, got k = {k}"
        )));
    }
    if max_iters == 0 {
        return Err(Error::InvalidArgument("k-means needs at least one iteration".into()));
    }
    points.ensure_finite("kmeans")?;
    let d = points.cols();
    let init = plus_plus_init(points, k, seed);
    let mut centroids = DenseMatrix::from_fn(k, d, |c, j| points[(init[c], j)]);
    let mut assignment: Vec<usize> = vec![usize::MAX; n];
    let mut iterations = 0;
    for _ in 0..max_iters {
        iterations += 1;
        let mut next: Vec<usize> = (0..n).map(|i| nearest(points.row(i), &centroids)).collect();
        repair_empty(points, &centroids, &mut next, k);
        let changed = next != assignment;
        assignment = next;
        centroids = means(points, &assignment, k);
        if !changed {
            break;
        }
    }
    Ok(KMeansResult {
        assignment,
        centroids,
        iterations,
    })
}

fn means(points: &DenseMatrix, assignment: &[usize], k: usize) -> DenseMatrix {
    let d = points.cols();
    let mut sums = DenseMatrix::zeros(k, d);
    let mut counts = vec![0usize; k];
    for (i, &c) in assignment.iter().enumerate() {
        counts[c] += 1;
        for (s, &x) in sums.row_mut(c).iter_mut().zip(points.row(i)) {
            *s += x;
        }
    }
    for c in 0..k {
        let inv = 1.0 / counts[c].max(1) as f64;
        for s in sums.row_mut(c) {
            *s *= inv;
        }
    }
    sums
}

fn repair_empty(points: &DenseMatrix, centroids: &DenseMatrix, assignment: &mut [usize], k: usize) {
    loop {
        let mut counts = vec![0usize; k];
        for &c in assignment.iter() {
            counts[c] += 1;
        }
        let Some(empty) = counts.iter().position(|&c| c == 0) else {
            return;
        };
        let mut far = None;
        let mut far_d = f64::NEG_INFINITY;
        for (i, &c) in assignment.iter().enumerate() {
            if counts[c] > 1 {
                let dist = sq_dist(points.row(i), centroids.row(c));
                if dist > far_d {
                    far_d = dist;
                    far = Some(i);
                }
            }
        }
        match far {
            Some(i) => assignment[i] = empty,
            None => return,
        }
    }
}
