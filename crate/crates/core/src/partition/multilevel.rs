use rand::seq::SliceRandom;

use super::coarsen::coarsen_weighted;
use super::objective::{check_feasible, Objective, Partition};
use crate::error::{Error, Result};
use crate::rng::seeded;
use crate::structures::{BaseVertex, Hyperedge, Hypergraph, SuperHyperGraph};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PartitionConfig {
    pub k: usize,
    pub c: f64,
    pub seed: u64,
    pub objective: Objective,
}

impl PartitionConfig {
    pub fn new(k: usize, c: f64, seed: u64) -> Self {
        PartitionConfig {
            k,
            c,
            seed,
            objective: Objective::Cut,
        }
    }
}

/// Objective before and after one refinement pass.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PassRecord {
    /// 0 is the input hypergraph; larger values are coarser.
    pub level: usize,
    pub before: f64,
    pub after: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionReport {
    pub partition: Partition,
    pub objective: f64,
    pub levels: usize,
    pub passes: Vec<PassRecord>,
}

const MAX_PASSES_PER_LEVEL: usize = 64;

struct Refiner<'a> {
    h: &'a Hypergraph,
    weights: &'a [usize],
    objective: Objective,
    k: usize,
    lo: usize,
    hi: usize,
    incident: Vec<Vec<usize>>,
    assignment: Vec<usize>,
    part_weight: Vec<usize>,
    pins: Vec<Vec<usize>>,
    spans: Vec<usize>,
}

impl<'a> Refiner<'a> {
    fn new(
        h: &'a Hypergraph,
        weights: &'a [usize],
        assignment: Vec<usize>,
        cfg: &PartitionConfig,
        bounds: (usize, usize),
    ) -> Self {
        let mut incident = vec![Vec::new(); h.num_vertices()];
        for (j, e) in h.hyperedges().iter().enumerate() {
            for &v in &e.members {
                incident[v].push(j);
            }
        }
        let mut r = Refiner {
            h,
            weights,
            objective: cfg.objective,
            k: cfg.k,
            lo: bounds.0,
            hi: bounds.1,
            incident,
            assignment,
            part_weight: Vec::new(),
            pins: Vec::new(),
            spans: Vec::new(),
        };
        r.rebuild();
        r
    }

    fn rebuild(&mut self) {
        self.part_weight = vec![0; self.k];
        for (v, &p) in self.assignment.iter().enumerate() {
            self.part_weight[p] += self.weights[v];
        }
        self.pins = vec![vec![0; self.k]; self.h.num_edges()];
        for (j, e) in self.h.hyperedges().iter().enumerate() {
            for &v in &e.members {
                self.pins[j][self.assignment[v]] += 1;
            }
        }
        self.spans = self.pins.iter().map(|c| c.iter().filter(|&&x| x > 0).count()).collect();
    }

    fn value(&self) -> f64 {
        self.objective.evaluate(self.h, &self.assignment)
    }

    /// Objective change when `v` moves to part `b`.
    fn delta(&self, v: usize, b: usize) -> f64 {
        let a = self.assignment[v];
        let mut d = 0.0;
        for &j in &self.incident[v] {
            let s = self.spans[j];
            let s2 = s - usize::from(self.pins[j][a] == 1) + usize::from(self.pins[j][b] == 0);
            if s2 != s {
                let w = self.h.hyperedges()[j].weight;
                d += self.objective.edge_cost(w, s2) - self.objective.edge_cost(w, s);
            }
        }
        d
    }

    fn apply(&mut self, v: usize, b: usize) {
        let a = self.assignment[v];
        for &j in &self.incident[v] {
            self.pins[j][a] -= 1;
            if self.pins[j][a] == 0 {
                self.spans[j] -= 1;
            }
            if self.pins[j][b] == 0 {
                self.spans[j] += 1;
            }
            self.pins[j][b] += 1;
        }
        self.part_weight[a] -= self.weights[v];
        self.part_weight[b] += self.weights[v];
        self.assignment[v] = b;
    }

    /// Lowest-delta move among candidates; ties go to the lowest vertex, then
    /// the lowest part.
    fn best_move(&self, allowed: impl Fn(usize, usize, usize) -> bool) -> Option<(usize, usize, f64)> {
        let mut best: Option<(usize, usize, f64)> = None;
        for v in 0..self.assignment.len() {
            let a = self.assignment[v];
            for b in 0..self.k {
                if b == a || !allowed(v, a, b) {
                    continue;
                }
                let d = self.delta(v, b);
                if best.is_none_or(|(_, _, bd)| d < bd) {
                    best = Some((v, b, d));
                }
            }
        }
        best
    }

    /// Moves vertices out of overweight parts, then into underweight parts,
    /// each time taking the cheapest move that does not create a new
    /// violation. Best effort on coarse levels; exact when weights are 1.
    fn rebalance(&mut self) {
        loop {
            let pw = &self.part_weight;
            let hi = self.hi;
            let w = self.weights;
            let mv = self.best_move(|v, a, b| pw[a] > hi && pw[b] + w[v] <= hi);
            match mv {
                Some((v, b, _)) => self.apply(v, b),
                None => break,
            }
        }
        loop {
            let pw = &self.part_weight;
            let (lo, hi) = (self.lo, self.hi);
            let w = self.weights;
            let mv = self.best_move(|v, a, b| pw[b] < lo && pw[a] >= lo + w[v] && pw[b] + w[v] <= hi);
            match mv {
                Some((v, b, _)) => self.apply(v, b),
                None => break,
            }
        }
    }

    /// Total weight by which parts exceed the bounds.
    fn violation(&self) -> usize {
        self.part_weight
            .iter()
            .map(|&w| w.saturating_sub(self.hi) + self.lo.saturating_sub(w))
            .sum()
    }

    /// One FM pass: repeatedly apply the best move of an unlocked vertex
    /// (negative gains included) that keeps every part within one maximum
    /// vertex weight of the bounds, lock it, then roll back to the best
    /// prefix whose balance violation is no worse than at the start.
    fn fm_pass(&mut self) -> (f64, f64) {
        let before = self.value();
        let eps = 1e-12 * (1.0 + before.abs());
        let start_violation = self.violation();
        let slack = self.weights.iter().copied().max().unwrap_or(0);
        let mut locked = vec![false; self.assignment.len()];
        let mut moves: Vec<(usize, usize)> = Vec::new();
        let (mut cum, mut best, mut best_len) = (0.0, 0.0, 0);
        loop {
            let pw = &self.part_weight;
            let (lo, hi) = (self.lo.saturating_sub(slack), self.hi + slack);
            let w = self.weights;
            let lk = &locked;
            let mv = self.best_move(|v, a, b| !lk[v] && pw[a] >= lo + w[v] && pw[b] + w[v] <= hi);
            let Some((v, b, d)) = mv else { break };
            moves.push((v, self.assignment[v]));
            self.apply(v, b);
            locked[v] = true;
            cum += d;
            if cum < best - eps && self.violation() <= start_violation {
                best = cum;
                best_len = moves.len();
            }
        }
        while moves.len() > best_len {
            let (v, a) = moves.pop().expect("non-empty");
            self.apply(v, a);
        }
        let mut after = self.value();
        if after > before {
            while let Some((v, a)) = moves.pop() {
                self.apply(v, a);
            }
            after = self.value();
        }
        assert!(after <= before, "refinement increased the objective: {before} -> {after}");
        (before, after)
    }

    fn refine(&mut self, level: usize, passes: &mut Vec<PassRecord>) {
        self.rebalance();
        for _ in 0..MAX_PASSES_PER_LEVEL {
            let (before, after) = self.fm_pass();
            passes.push(PassRecord { level, before, after });
            if after >= before {
                break;
            }
        }
    }
}

/// Seeded greedy growth: parts are grown one at a time from the first
/// unassigned vertex of a shuffled order, always absorbing the most strongly
/// connected vertex that fits the part's target weight.
fn initial_partition(h: &Hypergraph, weights: &[usize], k: usize, seed: u64) -> Vec<usize> {
    let n = h.num_vertices();
    let total: usize = weights.iter().sum();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut seeded(seed));
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut incident = vec![Vec::new(); n];
    for (j, e) in h.hyperedges().iter().enumerate() {
        for &v in &e.members {
            incident[v].push(j);
        }
    }
    const FREE: usize = usize::MAX;
    let mut assignment = vec![FREE; n];
    for p in 0..k {
        let target = total / k + usize::from(p < total % k);
        let mut weight = 0;
        let mut conn = vec![0.0f64; n];
        loop {
            let fits = |v: usize| assignment[v] == FREE && weight + weights[v] <= target;
            let connected = (0..n)
                .filter(|&v| fits(v) && conn[v] > 0.0)
                .max_by(|&a, &b| conn[a].total_cmp(&conn[b]).then(rank[b].cmp(&rank[a])));
            let pick = connected.or_else(|| order.iter().copied().find(|&v| fits(v)));
            let Some(v) = pick else { break };
            assignment[v] = p;
            weight += weights[v];
            for &j in &incident[v] {
                let e = &h.hyperedges()[j];
                if e.members.len() > 1 {
                    let share = e.weight / (e.members.len() - 1) as f64;
                    for &u in &e.members {
                        conn[u] += share;
                    }
                }
            }
            if weight >= target {
                break;
            }
        }
    }
    let mut part_weight = vec![0; k];
    for (v, &p) in assignment.iter().enumerate() {
        if p != FREE {
            part_weight[p] += weights[v];
        }
    }
    for &v in &order {
        if assignment[v] == FREE {
            let p = (0..k).min_by_key(|&p| (part_weight[p], p)).expect("k >= 1");
            assignment[v] = p;
            part_weight[p] += weights[v];
        }
    }
    assignment
}

/// Multilevel k-way partitioning: heavy-edge coarsening down to
/// `max(2k, 20)` vertices, seeded greedy growth, then rebalancing and FM
/// refinement on every level while projecting back.
pub fn multilevel_partition(h: &Hypergraph, cfg: &PartitionConfig) -> Result<PartitionReport> {
    let n = h.num_vertices();
    let bounds = check_feasible(n, cfg.k, cfg.c)?;
    let coarsest = (2 * cfg.k).max(20);

    let mut levels = Vec::new();
    let mut weights = vec![1usize; n];
    let mut current = h.clone();
    while current.num_vertices() > coarsest {
        let lvl = coarsen_weighted(&current, &weights, bounds.1);
        if lvl.is_identity() {
            break;
        }
        current = lvl.hypergraph.clone();
        weights = lvl.vertex_weights.clone();
        levels.push(lvl);
    }

    let mut passes = Vec::new();
    let mut assignment = initial_partition(&current, &weights, cfg.k, cfg.seed);
    let mut refiner = Refiner::new(&current, &weights, assignment, cfg, bounds);
    refiner.refine(levels.len(), &mut passes);
    assignment = refiner.assignment;

    for depth in (0..levels.len()).rev() {
        let fine = if depth == 0 { h } else { &levels[depth - 1].hypergraph };
        let fine_weights: Vec<usize> = if depth == 0 {
            vec![1; n]
        } else {
            levels[depth - 1].vertex_weights.clone()
        };
        let projected = levels[depth].mapping.iter().map(|&c| assignment[c]).collect();
        let mut refiner = Refiner::new(fine, &fine_weights, projected, cfg, bounds);
        refiner.refine(depth, &mut passes);
        assignment = refiner.assignment;
    }

    let partition = Partition::new(assignment, cfg.k, cfg.c)?;
    if !partition.is_balanced() {
        return Err(Error::Infeasible(format!(
            "refinement ended with part sizes {:?} outside [{}, {}]",
            partition.part_sizes(),
            bounds.0,
            bounds.1
        )));
    }
    let objective = cfg.objective.evaluate(h, &partition.assignment);
    Ok(PartitionReport {
        partition,
        objective,
        levels: levels.len(),
        passes,
    })
}

/// Hypergraph on the supervertices: a superedge contains a supervertex when
/// one of its members equals it in canonical form. Vertex names are the
/// supervertices' display forms.
pub fn supervertex_hypergraph(shg: &SuperHyperGraph) -> Result<Hypergraph> {
    let vertices = shg
        .supervertices()
        .iter()
        .map(|v| BaseVertex::new(v.to_string()))
        .collect::<Result<Vec<_>>>()?;
    let edges = shg
        .superedges()
        .iter()
        .map(|e| Hyperedge {
            members: e.members.iter().filter_map(|m| shg.supervertex_index(m)).collect(),
            weight: e.weight,
            id: e.id,
        })
        .collect();
    Hypergraph::with_edges(vertices, edges)
}

/// Partitions the supervertex set of `shg`.
pub fn multilevel_partition_shg(shg: &SuperHyperGraph, cfg: &PartitionConfig) -> Result<PartitionReport> {
    multilevel_partition(&supervertex_hypergraph(shg)?, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cliques() {
        let h = Hypergraph::with_indexed_vertices(
            6,
            vec![
                (vec![0, 1], 1.0),
                (vec![1, 2], 1.0),
                (vec![0, 2], 1.0),
                (vec![3, 4], 1.0),
                (vec![4, 5], 1.0),
                (vec![3, 5], 1.0),
            ],
        )
        .unwrap();
        for seed in 0..10 {
            let r = multilevel_partition(&h, &PartitionConfig::new(2, 1.0, seed)).unwrap();
            assert_eq!(r.objective, 0.0);
            let a = &r.partition.assignment;
            assert!(a[0] == a[1] && a[1] == a[2] && a[3] == a[4] && a[4] == a[5] && a[0] != a[3]);
        }
    }

    #[test]
    fn singletons_when_k_equals_n() {
        let h = Hypergraph::with_indexed_vertices(3, vec![(vec![0, 1, 2], 1.0), (vec![0, 2], 1.0)]).unwrap();
        let r = multilevel_partition(&h, &PartitionConfig::new(3, 1.0, 1)).unwrap();
        assert_eq!(r.objective, 3.0);
        assert_eq!(r.partition.part_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn deterministic_and_monotone_on_larger_graph() {
        let edges: Vec<(Vec<usize>, f64)> = (0..120)
            .map(|j| (vec![j % 60, (j * 7 + 3) % 60, (j * 13 + 5) % 60], 1.0 + (j % 3) as f64))
            .collect();
        let h = Hypergraph::with_indexed_vertices(60, edges).unwrap();
        let cfg = PartitionConfig::new(3, 1.1, 42);
        let a = multilevel_partition(&h, &cfg).unwrap();
        let b = multilevel_partition(&h, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.levels > 0);
        assert!(a.partition.is_balanced());
        assert!(a.passes.iter().all(|p| p.after <= p.before));
    }

    #[test]
    fn errors() {
        let h = Hypergraph::with_indexed_vertices(3, vec![]).unwrap();
        assert!(multilevel_partition(&h, &PartitionConfig::new(4, 1.0, 0)).is_err());
        let h = Hypergraph::with_indexed_vertices(7, vec![]).unwrap();
        assert!(matches!(
            multilevel_partition(&h, &PartitionConfig::new(2, 1.0, 0)),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn singleton_superhypergraph_matches_hypergraph() {
        let h = Hypergraph::with_indexed_vertices(
            7,
            vec![(vec![0, 1, 2], 1.0), (vec![2, 3], 2.0), (vec![4, 5, 6], 1.0), (vec![1, 6], 0.5)],
        )
        .unwrap();
        let shg = SuperHyperGraph::from_hypergraph(&h, 1).unwrap();
        let cfg = PartitionConfig::new(2, 1.2, 5);
        assert_eq!(
            multilevel_partition_shg(&shg, &cfg).unwrap(),
            multilevel_partition(&h, &cfg).unwrap()
        );
    }
}
