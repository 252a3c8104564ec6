//! Exhaustive oracles for small uniform hypergraphs: pattern containment,
//! Turán numbers and complete binary decision trees.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `r`-uniform hypergraph on vertices `0..n`. Edges are sorted vertex
/// lists, deduplicated and kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl UniformHypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("uniformity r must be at least 1".into()));
        }
        let mut clean = Vec::with_capacity(edges.len());
        for (j, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.len() != r {
                return Err(Error::InvalidArgument(format!("edge {j} has {} distinct vertices, expected {r}", e.len())));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidArgument(format!("edge {j} uses vertex {v} out of {n}")));
            }
            clean.push(e);
        }
        clean.sort();
        clean.dedup();
        Ok(UniformHypergraph { n, r, edges: clean })
    }

    /// All `r`-subsets of `0..n`.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        UniformHypergraph::new(n, r, subsets(n, r))
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: &[usize]) -> bool {
        let mut e = e.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    /// Copy with `e` added.
    pub fn with_edge(&self, e: Vec<usize>) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(e);
        UniformHypergraph::new(self.n, self.r, edges)
    }
}

/// `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

struct Embedder<'a> {
    g_edges: HashSet<Vec<usize>>,
    g_degree: Vec<usize>,
    f: &'a UniformHypergraph,
    f_degree: Vec<usize>,
    /// Pattern vertices in search order.
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl<'a> Embedder<'a> {
    fn new(g: &UniformHypergraph, f: &'a UniformHypergraph) -> Self {
        let degree = |h: &UniformHypergraph| {
            let mut d = vec![0; h.n];
            for e in &h.edges {
                for &v in e {
                    d[v] += 1;
                }
            }
            d
        };
        let f_degree = degree(f);
        let mut order: Vec<usize> = (0..f.n).collect();
        order.sort_by(|&a, &b| f_degree[b].cmp(&f_degree[a]).then(a.cmp(&b)));
        Embedder {
            g_edges: g.edges.iter().cloned().collect(),
            g_degree: degree(g),
            f,
            f_degree,
            order,
            map: vec![None; f.n],
            used: vec![false; g.n],
        }
    }

    /// Every pattern edge whose vertices are all mapped lands on an edge.
    fn consistent(&self) -> bool {
        self.f.edges.iter().all(|e| {
            let image: Option<Vec<usize>> = e.iter().map(|&v| self.map[v]).collect();
            match image {
                Some(mut img) => {
                    img.sort_unstable();
                    self.g_edges.contains(&img)
                }
                None => true,
            }
        })
    }

    fn assign(&mut self, fv: usize, gv: usize) {
        self.map[fv] = Some(gv);
        self.used[gv] = true;
    }

    fn unassign(&mut self, fv: usize) {
        if let Some(gv) = self.map[fv].take() {
            self.used[gv] = false;
        }
    }

    fn search(&mut self, depth: usize) -> bool {
        let Some(&fv) = self.order.get(depth) else {
            return true;
        };
        if self.map[fv].is_some() {
            return self.search(depth + 1);
        }
        for gv in 0..self.used.len() {
            if self.used[gv] || self.g_degree[gv] < self.f_degree[fv] {
                continue;
            }
            self.assign(fv, gv);
            if self.consistent() && self.search(depth + 1) {
                return true;
            }
            self.unassign(fv);
        }
        false
    }
}

fn check_pattern(g: &UniformHypergraph, f: &UniformHypergraph) -> Result<()> {
    if g.r != f.r {
        return Err(Error::InvalidArgument(format!("uniformity mismatch: host r = {}, pattern r = {}", g.r, f.r)));
    }
    if f.edges.is_empty() {
        return Err(Error::InvalidArgument("pattern has no edges".into()));
    }
    Ok(())
}

/// Whether some injective vertex map sends every edge of `f` onto an edge of
/// `g` (non-induced containment).
pub fn contains_pattern(g: &UniformHypergraph, f: &UniformHypergraph) -> Result<bool> {
    check_pattern(g, f)?;
    if f.n > g.n || f.edges.len() > g.edges.len() {
        return Ok(false);
    }
    Ok(Embedder::new(g, f).search(0))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Whether `g` has a copy of `f` that uses the edge `e` of `g`.
fn contains_pattern_through(g: &UniformHypergraph, f: &UniformHypergraph, e: &[usize]) -> bool {
    if f.n > g.n {
        return false;
    }
    let mut emb = Embedder::new(g, f);
    for fe in &f.edges {
        for image in permutations(e) {
            for (&fv, &gv) in fe.iter().zip(&image) {
                emb.assign(fv, gv);
            }
            if emb.consistent() && emb.search(0) {
                return true;
            }
            for v in 0..f.n {
                emb.unassign(v);
            }
        }
    }
    false
}

pub const TURAN_MAX_VERTICES: usize = 9;
pub const TURAN_MAX_UNIFORMITY: usize = 3;
pub const TURAN_MAX_CANDIDATE_EDGES: usize = 36;

fn turan_guard(n: usize, r: usize) -> Result<()> {
    if n > TURAN_MAX_VERTICES || r > TURAN_MAX_UNIFORMITY || binomial(n, r) > TURAN_MAX_CANDIDATE_EDGES {
        return Err(Error::GuardExceeded(format!(
            "Turán search needs N <= {TURAN_MAX_VERTICES}, r <= {TURAN_MAX_UNIFORMITY} and C(N, r) <= {TURAN_MAX_CANDIDATE_EDGES}; got N = {n}, r = {r}, C = {}",
            binomial(n, r)
        )));
    }
    Ok(())
}

/// Extremal number with one maximizing `F`-free witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranResult {
    pub ex: usize,
    pub witness: UniformHypergraph,
}

struct TuranSearch<'a> {
    f: &'a UniformHypergraph,
    n: usize,
    r: usize,
    candidates: Vec<Vec<usize>>,
    chosen: Vec<Vec<usize>>,
    best: Vec<Vec<usize>>,
}

impl TuranSearch<'_> {
    fn run(&mut self, i: usize) {
        if self.chosen.len() + (self.candidates.len() - i) <= self.best.len() {
            return;
        }
        if i == self.candidates.len() {
            self.best = self.chosen.clone();
            return;
        }
        let e = self.candidates[i].clone();
        self.chosen.push(e.clone());
        let g = UniformHypergraph {
            n: self.n,
            r: self.r,
            edges: self.chosen.clone(),
        };
        if !contains_pattern_through(&g, self.f, &e) {
            self.run(i + 1);
        }
        self.chosen.pop();
        self.run(i + 1);
    }
}

/// `ex_r(N, F)`: the most edges of an `F`-free `r`-uniform hypergraph on `N`
/// vertices, by branch-and-bound over the candidate edges in lexicographic
/// order (including an edge is tried first; subsets that already contain `F`
/// are not extended).
pub fn turan_number(n: usize, r: usize, f: &UniformHypergraph) -> Result<TuranResult> {
    turan_guard(n, r)?;
    let probe = UniformHypergraph::new(n, r, Vec::new())?;
    check_pattern(&probe, f)?;
    let mut search = TuranSearch {
        f,
        n,
        r,
        candidates: subsets(n, r),
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.run(0);
    let witness = UniformHypergraph::new(n, r, search.best)?;
    Ok(TuranResult {
        ex: witness.num_edges(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityPoint {
    pub n: usize,
    pub ex: usize,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityEstimate {
    pub points: Vec<DensityPoint>,
    /// Whether the ratios never increase along the range.
    pub non_increasing: bool,
}

/// `ex_r(N, F) / C(N, r)` for each `N` in `ns`.
pub fn turan_density_estimate(
    r: usize,
    f: &UniformHypergraph,
    ns: impl IntoIterator<Item = usize>,
) -> Result<DensityEstimate> {
    let mut points = Vec::new();
    for n in ns {
        if n < r {
            return Err(Error::InvalidArgument(format!("N = {n} is below r = {r}")));
        }
        let ex = turan_number(n, r, f)?.ex;
        points.push(DensityPoint {
            n,
            ex,
            ratio: ex as f64 / binomial(n, r) as f64,
        });
    }
    let non_increasing = points.windows(2).all(|w| w[1].ratio <= w[0].ratio);
    Ok(DensityEstimate { points, non_increasing })
}

/// Node of a complete binary decision tree. `dashed` is the 0-branch and
/// `solid` the 1-branch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionNode {
    Leaf(bool),
    Branch {
        variable: usize,
        dashed: Box<DecisionNode>,
        solid: Box<DecisionNode>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionTree {
    pub order: Vec<usize>,
    pub root: DecisionNode,
}

impl DecisionTree {
    /// Complete tree over `order`, a permutation of the variables `0..m`.
    /// `truth_table[a]` is the value at the assignment whose bits, most
    /// significant first, are the values of variables `0, 1, …, m−1`.
    pub fn build(truth_table: &[bool], order: &[usize]) -> Result<Self> {
        let m = order.len();
        if m >= usize::BITS as usize || truth_table.len() != 1usize << m {
            return Err(Error::InvalidArgument(format!(
                "truth table has {} entries, expected 2^{m}",
                truth_table.len()
            )));
        }
        let mut seen = vec![false; m];
        for &v in order {
            if v >= m || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidArgument(format!("order {order:?} is not a permutation of 0..{m}")));
            }
        }
        fn grow(table: &[bool], order: &[usize], depth: usize, index: usize, m: usize) -> DecisionNode {
            if depth == order.len() {
                return DecisionNode::Leaf(table[index]);
            }
            let bit = 1usize << (m - 1 - order[depth]);
            DecisionNode::Branch {
                variable: order[depth],
                dashed: Box::new(grow(table, order, depth + 1, index, m)),
                solid: Box::new(grow(table, order, depth + 1, index | bit, m)),
            }
        }
        Ok(DecisionTree {
            order: order.to_vec(),
            root: grow(truth_table, order, 0, 0, m),
        })
    }

    pub fn num_variables(&self) -> usize {
        self.order.len()
    }

    /// Follows the branch of each variable's value; `assignment[v]` is the
    /// value of variable `v`.
    pub fn evaluate(&self, assignment: &[bool]) -> Result<bool> {
        if assignment.len() != self.order.len() {
            return Err(Error::InvalidArgument(format!(
                "assignment has {} values for {} variables",
                assignment.len(),
                self.order.len()
            )));
        }
        let mut node = &self.root;
        loop {
            match node {
                DecisionNode::Leaf(v) => return Ok(*v),
                DecisionNode::Branch { variable, dashed, solid } => {
                    node = if assignment[*variable] { solid } else { dashed };
                }
            }
        }
    }

    /// Leaf values from left (all dashed) to right (all solid).
    pub fn leaves(&self) -> Vec<bool> {
        fn walk(n: &DecisionNode, out: &mut Vec<bool>) {
            match n {
                DecisionNode::Leaf(v) => out.push(*v),
                DecisionNode::Branch { dashed, solid, .. } => {
                    walk(dashed, out);
                    walk(solid, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out
    }
}
