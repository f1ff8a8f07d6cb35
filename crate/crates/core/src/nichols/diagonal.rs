//! Diagonal braidings, their generalized Dynkin diagrams, the arithmetic
//! finiteness criteria for U labels, and fixed-vector witnesses.

use super::BraidedSpace;
use crate::cyclotomic::{cyc, CycNum};
use crate::error::{Error, Result};
use crate::yd::{u_partner, SimpleLabel};
use crate::zn::{additive_order, md};
use serde::Serialize;

/// Shape of one connected component of a Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Component {
    /// Single vertex with `q ≠ 1` of order `N`: truncated polynomial ring, dimension `N`.
    A1 { vertex: usize, order: u32 },
    /// Cartan A₂: `q₁₁ = q₂₂ = q`, `q₁₂q₂₁ = q⁻¹`, `ord q = N`; dimension `N³`.
    A2 { vertices: [usize; 2], order: u32 },
    /// A vertex with label 1 (a primitive fixed line: infinite).
    Trivial { vertex: usize },
    /// Anything else; no verdict.
    Unknown { vertices: Vec<usize> },
}

impl Component {
    fn dimension(&self) -> Option<u64> {
        match self {
            Component::A1 { order, .. } => Some(*order as u64),
            Component::A2 { order, .. } => Some((*order as u64).pow(3)),
            _ => None,
        }
    }
}

/// Braiding matrix `q` of a diagonal braiding `c(e_a⊗e_b) = q_ab e_b⊗e_a`.
#[derive(Debug, Clone)]
pub struct DynkinData {
    pub q: Vec<Vec<CycNum>>,
    pub components: Vec<Component>,
}

impl DynkinData {
    pub fn vertex(&self, a: usize) -> &CycNum {
        &self.q[a][a]
    }

    /// `q_ab q_ba`.
    pub fn edge(&self, a: usize, b: usize) -> CycNum {
        &self.q[a][b] * &self.q[b][a]
    }

    /// All edge labels are 1.
    pub fn is_quantum_linear_space(&self) -> bool {
        let d = self.q.len();
        (0..d).all(|a| (a + 1..d).all(|b| self.edge(a, b).is_one()))
    }

    /// Dimension from the recognized components, when every component is recognized.
    pub fn predicted_dim(&self) -> Option<u64> {
        self.components.iter().map(Component::dimension).product()
    }

    pub fn has_trivial_vertex(&self) -> bool {
        self.components.iter().any(|c| matches!(c, Component::Trivial { .. }))
    }
}

/// The `q`-matrix and diagram, or `None` when the braiding is not diagonal
/// in the given basis.
pub fn diagonal_data(b: &BraidedSpace) -> Option<DynkinData> {
    let d = b.dim();
    let zero = CycNum::zero_in(b.braid().field());
    let mut q = vec![vec![zero; d]; d];
    for (col, entries) in b.braid().sparse_cols().into_iter().enumerate() {
        let (a, c) = (col / d, col % d);
        match entries.as_slice() {
            [(r, v)] if *r == c * d + a => q[a][c] = v.clone(),
            _ => return None,
        }
    }
    let components = classify(&q);
    Some(DynkinData { q, components })
}

fn classify(q: &[Vec<CycNum>]) -> Vec<Component> {
    let d = q.len();
    let edge = |a: usize, b: usize| !(&q[a][b] * &q[b][a]).is_one();
    let mut seen = vec![false; d];
    let mut out = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            for b in 0..d {
                if !seen[b] && edge(a, b) {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        if let Some(&v) = comp.iter().find(|&&v| q[v][v].is_one()) {
            out.push(Component::Trivial { vertex: v });
            continue;
        }
        let c = match *comp.as_slice() {
            [v] => match q[v][v].root_order() {
                Some(order) => Component::A1 { vertex: v, order },
                None => Component::Unknown { vertices: comp },
            },
            [a, b] => {
                let x = &q[a][a];
                let e = &q[a][b] * &q[b][a];
                match x.root_order() {
                    Some(order) if *x == q[b][b] && (&e * x).is_one() => Component::A2 { vertices: [a, b], order },
                    _ => Component::Unknown { vertices: comp },
                }
            }
            _ => Component::Unknown { vertices: comp },
        };
        out.push(c);
    }
    out
}

fn u_indices(l: SimpleLabel) -> Result<(i64, i64, i64, i64)> {
    match l {
        SimpleLabel::U { i, j, m, t } => Ok((i as i64, j as i64, m as i64, t as i64)),
        other => Err(Error::LabelParse(other.to_string(), "expected a U label".into())),
    }
}

/// Verdicts on finiteness of `𝔅(U(i,j,m,t))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct A2Verdict {
    pub label: String,
    /// The same module written as `U(j, i, t+2i, m-2j)`.
    pub partner: String,
    /// `mi+tj ≠ 0` and `(i+j)(m+t) = 2(j²-i²)`, on the indices as given.
    pub paper_condition: bool,
    /// The same congruences on the partner indices. They need not agree.
    pub paper_condition_partner: bool,
    /// `mi+tj ≠ 0` and the edge label `ξ^{2(ti+mj)+2(i²-j²)}` equals `q⁻¹`, `q = ξ^{mi+tj}`.
    pub cartan_condition: bool,
    /// `mi+tj ≠ 0` and the edge label is 1.
    pub disconnected: bool,
    /// Finite by a recognized diagram (Cartan A₂ or two A₁'s).
    pub finite: bool,
    /// `ord ξ^{mi+tj}` when `mi+tj ≠ 0`.
    pub order: Option<u32>,
    /// `N³` for A₂, `N²` for two points.
    pub predicted_dim: Option<u64>,
}

fn paper_congruences(n: u32, (i, j, m, t): (i64, i64, i64, i64)) -> bool {
    md(m * i + t * j, n) != 0 && md((i + j) * (m + t) - 2 * (j * j - i * i), n) == 0
}

/// Evaluates the rank-two criteria for a U label in Z_n.
pub fn a2_criterion(n: u32, l: SimpleLabel) -> Result<A2Verdict> {
    let (i, j, m, t) = u_indices(l)?;
    a2_criterion_indices(n, i, j, m, t)
}

/// As [`a2_criterion`], on indices that need not be canonical.
pub fn a2_criterion_indices(n: u32, i: i64, j: i64, m: i64, t: i64) -> Result<A2Verdict> {
    let p = u_partner(n, i, j, m, t);
    let p = (p.0 as i64, p.1 as i64, p.2 as i64, p.3 as i64);
    let s = md(m * i + t * j, n);
    let nonzero = s != 0;
    let paper_condition = paper_congruences(n, (i, j, m, t));
    let paper_condition_partner = paper_congruences(n, p);
    let edge = 2 * (t * i + m * j) + 2 * (i * i - j * j);
    let cartan_condition = nonzero && md(edge + s as i64, n) == 0;
    let disconnected = nonzero && md(edge, n) == 0;
    let order = nonzero.then(|| additive_order(s as i64, n));
    let predicted_dim = order.and_then(|o| {
        let o = o as u64;
        if cartan_condition {
            Some(o.pow(3))
        } else if disconnected {
            Some(o.pow(2))
        } else {
            None
        }
    });
    let show = |(i, j, m, t): (i64, i64, i64, i64)| format!("U({},{},{},{})", md(i, n), md(j, n), md(m, n), md(t, n));
    Ok(A2Verdict {
        label: show((i, j, m, t)),
        partner: show(p),
        paper_condition,
        paper_condition_partner,
        cartan_condition,
        disconnected,
        finite: cartan_condition || disconnected,
        order,
        predicted_dim,
    })
}

/// Arithmetic criterion for a direct sum of U labels.
#[derive(Debug, Clone, Serialize)]
pub struct SumVerdict {
    pub labels: Vec<A2Verdict>,
    /// `(a, b, mk+tℓ+pi+sj = 0, pj+si+tk+2ik+mℓ-2jℓ = 0)` for each pair `a < b`.
    pub pairs: Vec<(usize, usize, bool, bool)>,
    /// Every label passes the closed-form condition and every pair both congruences.
    pub paper_finite: bool,
    /// Every label has a recognized finite diagram and every pair both congruences
    /// (the congruences say exactly that no edge joins the two diagrams).
    pub finite: bool,
    /// Product of the per-label dimensions when `finite`.
    pub predicted_dim: Option<u64>,
}

pub fn sum_criterion(n: u32, labels: &[SimpleLabel]) -> Result<SumVerdict> {
    let verdicts = labels.iter().map(|&l| a2_criterion(n, l)).collect::<Result<Vec<_>>>()?;
    let idx = labels.iter().map(|&l| u_indices(l)).collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            let (i, j, m, t) = idx[a];
            let (k, l, p, s) = idx[b];
            let b1 = md(m * k + t * l + p * i + s * j, n) == 0;
            let b2 = md(p * j + s * i + t * k + 2 * i * k + m * l - 2 * j * l, n) == 0;
            pairs.push((a, b, b1, b2));
        }
    }
    let separated = pairs.iter().all(|p| p.2 && p.3);
    let paper_finite = separated && verdicts.iter().all(|v| v.paper_condition);
    let finite = separated && verdicts.iter().all(|v| v.finite);
    let predicted_dim = if finite { verdicts.iter().map(|v| v.predicted_dim).product() } else { None };
    Ok(SumVerdict { labels: verdicts, pairs, paper_finite, finite, predicted_dim })
}

/// A nonzero `v` with `c(v⊗v) = v⊗v`; its presence forces `dim 𝔅(V) = ∞`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub vector: Vec<CycNum>,
    pub reason: String,
}

fn fixes_square(b: &BraidedSpace, v: &[CycNum]) -> bool {
    let d = b.dim();
    let mut vv = Vec::with_capacity(d * d);
    for x in v {
        for y in v {
            vv.push(x * y);
        }
    }
    b.braid().mul_vec(&vv) == vv
}

/// Searches basis vectors, then (when `dim V = n`) the vectors
/// `Σ_a ξ^{sa} e_a`, for a fixed point of `v ↦ c(v⊗v)`.
pub fn infinite_precheck(b: &BraidedSpace) -> Option<Witness> {
    let d = b.dim();
    let n = b.n();
    let zero = CycNum::zero_in(b.braid().field());
    let one = cyc(n, 0).expect("valid conductor");
    for a in 0..d {
        let mut v = vec![zero.clone(); d];
        v[a] = one.clone();
        if fixes_square(b, &v) {
            return Some(Witness { vector: v, reason: format!("c(e{a}⊗e{a}) = e{a}⊗e{a}") });
        }
    }
    if d == n as usize {
        for s in 0..n as i64 {
            let v: Vec<CycNum> = (0..d as i64).map(|a| cyc(n, s * a).expect("valid conductor")).collect();
            if fixes_square(b, &v) {
                return Some(Witness { vector: v, reason: format!("v = Σ_a ξ^({s}a) e_a is fixed") });
            }
        }
    }
    None
}
