use crate::error::{Error, Result};
use crate::structures::Hypergraph;

/// Assignment of vertices to parts `0..k` under imbalance tolerance `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    pub assignment: Vec<usize>,
    pub k: usize,
    pub c: f64,
}

impl Partition {
    pub fn new(assignment: Vec<usize>, k: usize, c: f64) -> Result<Self> {
        if let Some(&p) = assignment.iter().find(|&&p| p >= k) {
            return Err(Error::InvalidArgument(format!("part index {p} out of k = {k}")));
        }
        Ok(Partition { assignment, k, c })
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.k];
        for &p in &self.assignment {
            s[p] += 1;
        }
        s
    }

    /// Whether every part size lies in [`balance_bounds`].
    pub fn is_balanced(&self) -> bool {
        match balance_bounds(self.assignment.len(), self.k, self.c) {
            Ok((lo, hi)) => self.part_sizes().iter().all(|&s| lo <= s && s <= hi),
            Err(_) => false,
        }
    }

    /// Members of each part in ascending vertex order.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &p) in self.assignment.iter().enumerate() {
            out[p].push(v);
        }
        out
    }
}

// Guards the integer rounding of the real-valued bounds against
// representation error in `c`.
const ROUNDING_SLACK: f64 = 1e-9;

/// Integer part-size bounds `⌈n/(k·c)⌉ ≤ |V_i| ≤ ⌊c·n/k⌋`.
pub fn balance_bounds(n: usize, k: usize, c: f64) -> Result<(usize, usize)> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if !(c >= 1.0) || !c.is_finite() {
        return Err(Error::InvalidArgument(format!("imbalance c = {c} must be a finite value >= 1")));
    }
    let nf = n as f64;
    let kf = k as f64;
    let lo = (nf / (kf * c) - ROUNDING_SLACK).ceil().max(0.0) as usize;
    let hi = (c * nf / kf + ROUNDING_SLACK).floor() as usize;
    Ok((lo, hi))
}

/// Checks `k ≤ n` and that some assignment meets the bounds.
pub fn check_feasible(n: usize, k: usize, c: f64) -> Result<(usize, usize)> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds {n} vertices")));
    }
    let (lo, hi) = balance_bounds(n, k, c)?;
    if k * lo > n || k * hi < n || lo > hi {
        return Err(Error::Infeasible(format!(
            "{n} vertices cannot form {k} parts with sizes in [{lo}, {hi}]"
        )));
    }
    Ok((lo, hi))
}

fn check_cover(h: &Hypergraph, p: &Partition) -> Result<()> {
    if p.assignment.len() != h.num_vertices() {
        return Err(Error::InvalidArgument(format!(
            "partition covers {} of {} vertices",
            p.assignment.len(),
            h.num_vertices()
        )));
    }
    Ok(())
}

/// Number of distinct parts among the members of each edge.
pub fn spans(h: &Hypergraph, assignment: &[usize]) -> Vec<usize> {
    h.hyperedges()
        .iter()
        .map(|e| {
            let mut parts: Vec<usize> = e.members.iter().map(|&v| assignment[v]).collect();
            parts.sort_unstable();
            parts.dedup();
            parts.len()
        })
        .collect()
}

/// Which objective the refinement minimizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    /// `Σ w(e)·(spanned(e) − 1)`.
    Cut,
    /// `Σ_{spanned(e) > 1} w(e)·spanned(e)`.
    Soed,
}

impl Objective {
    pub(crate) fn edge_cost(self, weight: f64, spanned: usize) -> f64 {
        match self {
            Objective::Cut => weight * spanned.saturating_sub(1) as f64,
            Objective::Soed if spanned > 1 => weight * spanned as f64,
            Objective::Soed => 0.0,
        }
    }

    pub fn evaluate(self, h: &Hypergraph, assignment: &[usize]) -> f64 {
        h.hyperedges()
            .iter()
            .zip(spans(h, assignment))
            .map(|(e, s)| self.edge_cost(e.weight, s))
            .sum()
    }
}

pub fn cut_objective(h: &Hypergraph, p: &Partition) -> Result<f64> {
    check_cover(h, p)?;
    Ok(Objective::Cut.evaluate(h, &p.assignment))
}

pub fn soed_objective(h: &Hypergraph, p: &Partition) -> Result<f64> {
    check_cover(h, p)?;
    Ok(Objective::Soed.evaluate(h, &p.assignment))
}

/// Total weight of edges whose members lie in more than one part; on a
/// graph this is the inter-cluster weight.
pub fn weighted_cut(h: &Hypergraph, p: &Partition) -> Result<f64> {
    check_cover(h, p)?;
    Ok(h
        .hyperedges()
        .iter()
        .zip(spans(h, &p.assignment))
        .filter(|(_, s)| *s > 1)
        .map(|(e, _)| e.weight)
        .sum())
}
