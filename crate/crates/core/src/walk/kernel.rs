use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::rng::{sample_index, seeded};
use crate::structures::{Hypergraph, SuperHyperGraph};

/// Vertex choice inside the selected edge.
#[derive(Clone, Debug, PartialEq)]
pub enum Selection {
    Uniform,
    /// `γ_e(v)` per edge, aligned with that edge's member list.
    Weighted(Vec<Vec<f64>>),
}

/// Treatment of states with no incident edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DanglingPolicy {
    Error,
    /// Self-loop with probability 1.
    Lazy,
}

/// Row-stochastic transition matrix over named states.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionKernel {
    states: Vec<String>,
    p: DenseMatrix,
}

pub const ROW_SUM_TOLERANCE: f64 = 1e-12;

impl TransitionKernel {
    /// Checks squareness, non-negativity and row sums within `1 ± 1e-12`.
    pub fn new(states: Vec<String>, p: DenseMatrix) -> Result<Self> {
        if p.rows() != p.cols() || p.rows() != states.len() {
            return Err(Error::shape(
                "TransitionKernel",
                format!("{} states for a {}x{} matrix", states.len(), p.rows(), p.cols()),
            ));
        }
        p.ensure_finite("transition matrix")?;
        for i in 0..p.rows() {
            let row = p.row(i);
            if row.iter().any(|&x| x < 0.0) {
                return Err(Error::InvalidArgument(format!("row {i} has a negative entry")));
            }
            let s: f64 = row.iter().sum();
            if (s - 1.0).abs() > ROW_SUM_TOLERANCE {
                return Err(Error::InvalidArgument(format!("row {i} sums to {s}")));
            }
        }
        Ok(TransitionKernel { states, p })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }
}

struct WalkEdge {
    members: Vec<usize>,
    weight: f64,
    gamma: Vec<f64>,
}

fn build(states: Vec<String>, edges: Vec<WalkEdge>, policy: DanglingPolicy) -> Result<TransitionKernel> {
    let n = states.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (j, e) in edges.iter().enumerate() {
        for &v in &e.members {
            incident[v].push(j);
        }
    }
    let mut p = DenseMatrix::zeros(n, n);
    for v in 0..n {
        if incident[v].is_empty() {
            match policy {
                DanglingPolicy::Error => return Err(Error::Dangling(states[v].clone())),
                DanglingPolicy::Lazy => {
                    p[(v, v)] = 1.0;
                    continue;
                }
            }
        }
        let total: f64 = incident[v].iter().map(|&j| edges[j].weight).sum();
        if total <= 0.0 {
            return Err(Error::ZeroIncidentWeight(states[v].clone()));
        }
        for &j in &incident[v] {
            let e = &edges[j];
            let pick = e.weight / total;
            let gsum: f64 = e.gamma.iter().sum();
            for (&u, &g) in e.members.iter().zip(&e.gamma) {
                p[(v, u)] += pick * (g / gsum);
            }
        }
    }
    TransitionKernel::new(states, p)
}

fn gammas(selection: &Selection, sizes: &[usize]) -> Result<Vec<Vec<f64>>> {
    match selection {
        Selection::Uniform => Ok(sizes.iter().map(|&s| vec![1.0; s]).collect()),
        Selection::Weighted(g) => {
            if g.len() != sizes.len() {
                return Err(Error::shape(
                    "selection",
                    format!("{} gamma lists for {} edges", g.len(), sizes.len()),
                ));
            }
            for (j, (gs, &s)) in g.iter().zip(sizes).enumerate() {
                if gs.len() != s {
                    return Err(Error::shape(
                        "selection",
                        format!("edge {j}: {} gamma values for {s} members", gs.len()),
                    ));
                }
                if gs.iter().any(|x| !x.is_finite() || *x < 0.0) {
                    return Err(Error::InvalidArgument(format!("edge {j}: gamma values must be finite and >= 0")));
                }
                if s > 0 && gs.iter().sum::<f64>() <= 0.0 {
                    return Err(Error::InvalidArgument(format!("edge {j}: gamma values sum to 0")));
                }
            }
            Ok(g.clone())
        }
    }
}

/// Hypergraph walk: from `v`, pick an incident edge with probability
/// proportional to its weight, then a member `u` proportional to `γ_e(u)`.
/// States are the vertices; `γ` aligns with each edge's sorted members.
pub fn transition_kernel(h: &Hypergraph, selection: &Selection, policy: DanglingPolicy) -> Result<TransitionKernel> {
    let sizes: Vec<usize> = h.hyperedges().iter().map(|e| e.members.len()).collect();
    let g = gammas(selection, &sizes)?;
    let edges = h
        .hyperedges()
        .iter()
        .zip(g)
        .map(|(e, gamma)| WalkEdge {
            members: e.members.clone(),
            weight: e.weight,
            gamma,
        })
        .collect();
    let states = h.vertices().iter().map(|v| v.name().to_string()).collect();
    build(states, edges, policy)
}

/// Superhypergraph walk on the supervertices. A superedge contains a
/// supervertex when one of its members equals it in canonical form; other
/// members are ignored. `γ` aligns with each superedge's member list.
pub fn shg_transition_kernel(
    shg: &SuperHyperGraph,
    selection: &Selection,
    policy: DanglingPolicy,
) -> Result<TransitionKernel> {
    let sizes: Vec<usize> = shg.superedges().iter().map(|e| e.members.len()).collect();
    let g = gammas(selection, &sizes)?;
    let mut edges = Vec::with_capacity(sizes.len());
    for (j, (e, gamma)) in shg.superedges().iter().zip(g).enumerate() {
        let mut members = Vec::new();
        let mut kept = Vec::new();
        for (m, gv) in e.members.iter().zip(gamma) {
            if let Some(i) = shg.supervertex_index(m) {
                members.push(i);
                kept.push(gv);
            }
        }
        if !members.is_empty() && kept.iter().sum::<f64>() <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "superedge {j}: gamma values of supervertex members sum to 0"
            )));
        }
        edges.push(WalkEdge {
            members,
            weight: e.weight,
            gamma: kept,
        });
    }
    let states = shg.supervertices().iter().map(|v| v.to_string()).collect();
    build(states, edges, policy)
}

/// Walk on the base vertices of the expansion.
pub fn expanded_transition_kernel(
    shg: &SuperHyperGraph,
    selection: &Selection,
    policy: DanglingPolicy,
) -> Result<TransitionKernel> {
    transition_kernel(&shg.expand(), selection, policy)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkConfig {
    pub start: usize,
    pub steps: usize,
    pub seed: u64,
}

/// Trajectory of `steps + 1` state indices; each step samples the current
/// row by inverse CDF with a ChaCha8 stream seeded from `cfg.seed`.
pub fn simulate(k: &TransitionKernel, cfg: &WalkConfig) -> Result<Vec<usize>> {
    if cfg.start >= k.len() {
        return Err(Error::InvalidArgument(format!(
            "start state {} out of {} states",
            cfg.start,
            k.len()
        )));
    }
    let mut rng = seeded(cfg.seed);
    let mut path = Vec::with_capacity(cfg.steps + 1);
    let mut cur = cfg.start;
    path.push(cur);
    for _ in 0..cfg.steps {
        cur = sample_index(&mut rng, k.p.row(cur)).expect("stochastic row");
        path.push(cur);
    }
    Ok(path)
}
