//! Rule-based message passing shared by the fuzzy, neutrosophic and
//! plithogenic graph networks.
//!
//! Every vertex `v` and edge `e` is reduced to a scalar grade `g_v`, `g_e`,
//! and every edge carries a contradiction discount `1 − δ_e`. With coupling
//! `c_e = g_e · (1 − δ_e)`, one layer computes
//!
//! ```text
//! m_v   = Σ_{e=(v,u)} c_e · g_u · H_u
//! r_k   = A_k(g_v) · Σ_{e=(v,u)} c_e · B_k(g_u)
//! r̂_k   = r_k / Σ_j r_j            (uniform 1/K when every r_j is 0)
//! H'_v  = σ(Σ_k r̂_k (H_v W_k + m_v U_k + b_k) [+ H_v])
//! ```

use crate::error::{Error, Result};
use crate::linalg::{Activation, DenseMatrix};

/// Antecedent membership function on a scalar grade.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MembershipFunction {
    /// Always 1.
    One,
    Triangular { a: f64, b: f64, c: f64 },
    Trapezoid { a: f64, b: f64, c: f64, d: f64 },
    Gaussian { mean: f64, sigma: f64 },
}

impl MembershipFunction {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            MembershipFunction::One => 1.0,
            MembershipFunction::Triangular { a, b, c } => {
                if x == b {
                    1.0
                } else if x <= a || x >= c {
                    0.0
                } else if x < b {
                    (x - a) / (b - a)
                } else {
                    (c - x) / (c - b)
                }
            }
            MembershipFunction::Trapezoid { a, b, c, d } => {
                if (b..=c).contains(&x) {
                    1.0
                } else if x <= a || x >= d {
                    0.0
                } else if x < b {
                    (x - a) / (b - a)
                } else {
                    (d - x) / (d - c)
                }
            }
            MembershipFunction::Gaussian { mean, sigma } => {
                let z = (x - mean) / sigma;
                (-0.5 * z * z).exp()
            }
        }
    }

    fn check(self) -> Result<()> {
        let ok = match self {
            MembershipFunction::One => true,
            MembershipFunction::Triangular { a, b, c } => a <= b && b <= c && [a, b, c].iter().all(|v| v.is_finite()),
            MembershipFunction::Trapezoid { a, b, c, d } => {
                a <= b && b <= c && c <= d && [a, b, c, d].iter().all(|v| v.is_finite())
            }
            MembershipFunction::Gaussian { mean, sigma } => mean.is_finite() && sigma.is_finite() && sigma > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("invalid membership function {self:?}")))
        }
    }
}

/// `IF v is A AND u is B`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rule {
    pub vertex: MembershipFunction,
    pub neighbor: MembershipFunction,
}

impl Rule {
    pub fn always() -> Self {
        Rule {
            vertex: MembershipFunction::One,
            neighbor: MembershipFunction::One,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RuleSet {
    rules: Vec<Rule>,
}

impl RuleSet {
    pub fn new(rules: Vec<Rule>) -> Result<Self> {
        if rules.is_empty() {
            return Err(Error::InvalidArgument("a rule set needs at least one rule".into()));
        }
        for r in &rules {
            r.vertex.check()?;
            r.neighbor.check()?;
        }
        Ok(RuleSet { rules })
    }

    /// A single rule that always fires.
    pub fn single() -> Self {
        RuleSet {
            rules: vec![Rule::always()],
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

/// Affine consequent `f_k(h, m) = h W + m U + b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Consequent {
    pub w: DenseMatrix,
    pub u: DenseMatrix,
    pub b: Vec<f64>,
}

impl Consequent {
    /// `W = I`, `U = 0`, `b = 0`.
    pub fn identity(d: usize) -> Self {
        Consequent {
            w: DenseMatrix::identity(d),
            u: DenseMatrix::zeros(d, d),
            b: vec![0.0; d],
        }
    }
}

/// One rule layer: a consequent per rule, an activation and an optional
/// residual connection.
#[derive(Clone, Debug, PartialEq)]
pub struct RuleLayer {
    pub consequents: Vec<Consequent>,
    pub activation: Activation,
    pub residual: bool,
}

impl RuleLayer {
    fn check(&self, rules: usize, d_in: usize, l: usize) -> Result<usize> {
        if self.consequents.len() != rules {
            return Err(Error::shape(
                "rule layer",
                format!("layer {l} has {} consequents for {rules} rules", self.consequents.len()),
            ));
        }
        let d_out = self.consequents[0].w.cols();
        for (k, c) in self.consequents.iter().enumerate() {
            if c.w.shape() != (d_in, d_out) || c.u.shape() != (d_in, d_out) || c.b.len() != d_out {
                return Err(Error::shape(
                    "rule layer",
                    format!(
                        "layer {l} consequent {k}: W {:?}, U {:?}, b {} for {d_in} -> {d_out}",
                        c.w.shape(),
                        c.u.shape(),
                        c.b.len()
                    ),
                ));
            }
            c.w.ensure_finite("consequent W")?;
            c.u.ensure_finite("consequent U")?;
        }
        if self.residual && d_out != d_in {
            return Err(Error::shape(
                "rule layer",
                format!("layer {l} is residual but maps {d_in} -> {d_out}"),
            ));
        }
        Ok(d_out)
    }
}

/// Scalar grades and edge couplings of an annotated graph.
#[derive(Clone, Debug, PartialEq)]
pub struct Grades {
    pub vertex: Vec<f64>,
    /// `(u, v, g_e, 1 − δ_e)` per edge.
    pub edges: Vec<(usize, usize, f64, f64)>,
}

impl Grades {
    fn neighbor_lists(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.vertex.len()];
        for &(u, v, g, keep) in &self.edges {
            let c = g * keep;
            adj[u].push((v, c));
            adj[v].push((u, c));
        }
        adj
    }

    /// Normalized firing strengths `r̂_k(v)`, one row per vertex.
    pub fn firing_strengths(&self, rules: &RuleSet) -> DenseMatrix {
        let adj = self.neighbor_lists();
        let k = rules.len();
        let mut out = DenseMatrix::zeros(self.vertex.len(), k);
        for (v, nbrs) in adj.iter().enumerate() {
            let row = out.row_mut(v);
            for (r, rule) in row.iter_mut().zip(rules.rules()) {
                let support: f64 = nbrs.iter().map(|&(u, c)| c * rule.neighbor.eval(self.vertex[u])).sum();
                *r = rule.vertex.eval(self.vertex[v]) * support;
            }
            let total: f64 = row.iter().sum();
            if total > 0.0 {
                row.iter_mut().for_each(|r| *r /= total);
            } else {
                row.iter_mut().for_each(|r| *r = 1.0 / k as f64);
            }
        }
        out
    }

    /// Messages `m_v = Σ c_e · g_u · H_u`.
    pub fn messages(&self, h: &DenseMatrix) -> DenseMatrix {
        let adj = self.neighbor_lists();
        let mut m = DenseMatrix::zeros(h.rows(), h.cols());
        for (v, nbrs) in adj.iter().enumerate() {
            for &(u, c) in nbrs {
                let coeff = c * self.vertex[u];
                let src = h.row(u).to_vec();
                for (acc, x) in m.row_mut(v).iter_mut().zip(src) {
                    *acc += coeff * x;
                }
            }
        }
        m
    }
}

/// Runs the rule layers and returns the last hidden state (no readout).
pub fn rule_network_hidden(
    grades: &Grades,
    x: &DenseMatrix,
    rules: &RuleSet,
    layers: &[RuleLayer],
) -> Result<DenseMatrix> {
    if x.rows() != grades.vertex.len() {
        return Err(Error::shape(
            "rule network",
            format!("{} feature rows for {} vertices", x.rows(), grades.vertex.len()),
        ));
    }
    x.ensure_finite("features")?;
    let firing = grades.firing_strengths(rules);
    let mut h = x.clone();
    for (l, layer) in layers.iter().enumerate() {
        let d_out = layer.check(rules.len(), h.cols(), l)?;
        let m = grades.messages(&h);
        let mut next = DenseMatrix::zeros(h.rows(), d_out);
        for (k, c) in layer.consequents.iter().enumerate() {
            let y = h.matmul(&c.w)?.add(&m.matmul(&c.u)?)?;
            for v in 0..h.rows() {
                let r = firing[(v, k)];
                let yrow = y.row(v);
                for (o, acc) in next.row_mut(v).iter_mut().enumerate() {
                    *acc += r * (yrow[o] + c.b[o]);
                }
            }
        }
        if layer.residual {
            next = next.add(&h)?;
        }
        h = layer.activation.apply_matrix(&next);
    }
    Ok(h)
}
