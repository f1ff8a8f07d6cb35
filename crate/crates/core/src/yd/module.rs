use super::label::{Sign, SimpleLabel};
use crate::cyclotomic::{CycMatrix, CycNum, SparseVec};
use crate::error::{Error, Result};
use crate::hopf::{KnAlgebra, KnBasis, KnElement};
use crate::zn::md;
use std::collections::BTreeMap;

/// Finite-dimensional Yetter-Drinfeld module over K_n.
///
/// The action is stored on the generators `p_{ab}` and `x̂`; `f_{ab}` acts as
/// `p_{ab} x̂`. The coaction is `δ(v_j) = Σ_k h_{kj} ⊗ v_k`, stored per `j` as
/// `(h_{kj}, k)` pairs with increasing `k`.
#[derive(Clone)]
pub struct YDModule {
    alg: KnAlgebra,
    dim: usize,
    action_p: Vec<CycMatrix>,
    action_x: CycMatrix,
    coaction: Vec<Vec<(KnElement, usize)>>,
    /// `basis_cols[b.index(n)][l]` = image of `v_l` under basis element `b`.
    basis_cols: Vec<Vec<SparseVec>>,
    label: Option<SimpleLabel>,
}

/// Which x̂-action to use for the n-dimensional family W.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WVariant {
    /// `x̂·w_r = ε ξ^{4ir} w_{-r}`.
    Twisted,
    /// `x̂·w_r = ε w_{-r}`.
    Plain,
}

impl YDModule {
    /// Assembles a module from generator actions and coaction lists; only
    /// shapes are validated here, the axioms are checked by `check_yd`.
    pub fn new(
        alg: KnAlgebra,
        action_p: Vec<CycMatrix>,
        action_x: CycMatrix,
        coaction: Vec<Vec<(KnElement, usize)>>,
    ) -> Result<Self> {
        let n = alg.n();
        let dim = action_x.rows();
        let square = |m: &CycMatrix| m.rows() == dim && m.cols() == dim && m.n() == n;
        if action_p.len() != (n * n) as usize || !action_p.iter().all(square) || !square(&action_x) {
            return Err(Error::DimensionMismatch("action matrices must be dim x dim, one per p_ab".into()));
        }
        if coaction.len() != dim || coaction.iter().flatten().any(|(h, k)| *k >= dim || h.n() != n) {
            return Err(Error::DimensionMismatch("coaction indices".into()));
        }
        let coaction = coaction
            .into_iter()
            .map(|entries| {
                let mut by_k: BTreeMap<usize, KnElement> = BTreeMap::new();
                for (h, k) in entries {
                    let slot = by_k.entry(k).or_insert_with(|| KnElement::zero(n));
                    *slot = &*slot + &h;
                }
                by_k.into_iter().filter(|(_, h)| !h.is_zero()).map(|(k, h)| (h, k)).collect()
            })
            .collect();
        let xcols = action_x.sparse_cols();
        let mut basis_cols = Vec::with_capacity(2 * (n * n) as usize);
        for p in &action_p {
            basis_cols.push(p.sparse_cols());
        }
        for p in &action_p {
            basis_cols.push(xcols.iter().map(|c| p.mul_sparse(c)).collect());
        }
        Ok(YDModule { alg, dim, action_p, action_x, coaction, basis_cols, label: None })
    }

    pub fn with_label(mut self, l: SimpleLabel) -> Self {
        self.label = Some(l);
        self
    }

    pub fn label(&self) -> Option<SimpleLabel> {
        self.label
    }

    pub fn algebra(&self) -> KnAlgebra {
        self.alg
    }

    pub fn n(&self) -> u32 {
        self.alg.n()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action_p(&self, a: u32, b: u32) -> &CycMatrix {
        &self.action_p[(a * self.n() + b) as usize]
    }

    pub fn action_p_all(&self) -> &[CycMatrix] {
        &self.action_p
    }

    pub fn action_x(&self) -> &CycMatrix {
        &self.action_x
    }

    /// `δ(v_j)` as `(h_{kj}, k)` pairs.
    pub fn coaction(&self, j: usize) -> &[(KnElement, usize)] {
        &self.coaction[j]
    }

    /// Image of basis vector `v_l` under basis element `b`.
    pub fn act_basis_col(&self, b: KnBasis, l: usize) -> &SparseVec {
        &self.basis_cols[b.index(self.n())][l]
    }

    /// Image of `v_l` under an arbitrary element.
    pub fn act_col(&self, h: &KnElement, l: usize) -> SparseVec {
        let mut acc: BTreeMap<usize, CycNum> = BTreeMap::new();
        for (b, c) in h.iter() {
            for (r, v) in self.act_basis_col(*b, l) {
                let t = c * v;
                match acc.get_mut(r) {
                    Some(x) => *x += &t,
                    None => {
                        acc.insert(*r, t);
                    }
                }
            }
        }
        acc.into_iter().filter(|e| !e.1.is_zero()).collect()
    }

    /// Matrix of the action of `h`.
    pub fn act(&self, h: &KnElement) -> CycMatrix {
        let cols: Vec<SparseVec> = (0..self.dim).map(|l| self.act_col(h, l)).collect();
        let entries = cols.into_iter().enumerate().flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, v)));
        CycMatrix::from_triplets(self.n(), self.dim, self.dim, entries).expect("shape")
    }

    pub fn act_basis(&self, b: KnBasis) -> CycMatrix {
        self.act(&self.alg.element(b))
    }

    /// Weight `(a, b)` of each basis vector when every `p_{ab}` acts diagonally.
    pub fn weights(&self) -> Option<Vec<(u32, u32)>> {
        let n = self.n();
        let mut w: Vec<Option<(u32, u32)>> = vec![None; self.dim];
        for a in 0..n {
            for b in 0..n {
                for (r, row) in self.action_p(a, b).sparse_rows().into_iter().enumerate() {
                    match row.as_slice() {
                        [] => {}
                        [(c, v)] if *c == r && v.is_one() && w[r].is_none() => w[r] = Some((a, b)),
                        _ => return None,
                    }
                }
            }
        }
        w.into_iter().collect()
    }

    /// Same actions and coaction, entry by entry.
    pub fn same_structure(&self, o: &YDModule) -> bool {
        self.alg == o.alg
            && self.dim == o.dim
            && self.action_p == o.action_p
            && self.action_x == o.action_x
            && self.coaction == o.coaction
    }

    /// Direct sum; basis of `self` first.
    pub fn direct_sum(&self, o: &YDModule) -> Result<YDModule> {
        if self.alg != o.alg {
            return Err(Error::ConductorMismatch(self.n(), o.n()));
        }
        let d1 = self.dim;
        let d = d1 + o.dim;
        let n = self.n();
        let blk = |a: &CycMatrix, b: &CycMatrix| {
            let mut e = Vec::new();
            for r in 0..a.rows() {
                for (c, v) in a.row(r) {
                    e.push((r, c, v));
                }
            }
            for r in 0..b.rows() {
                for (c, v) in b.row(r) {
                    e.push((d1 + r, d1 + c, v));
                }
            }
            CycMatrix::from_triplets(n, d, d, e).expect("shape")
        };
        let ap = self.action_p.iter().zip(&o.action_p).map(|(a, b)| blk(a, b)).collect();
        let ax = blk(&self.action_x, &o.action_x);
        let mut co = self.coaction.clone();
        co.extend(o.coaction.iter().map(|l| l.iter().map(|(h, k)| (h.clone(), k + d1)).collect()));
        YDModule::new(self.alg, ap, ax, co)
    }
}

fn unit_at(alg: KnAlgebra, dim: usize, entries: Vec<(usize, usize, CycNum)>) -> CycMatrix {
    CycMatrix::from_triplets(alg.n(), dim, dim, entries).expect("shape")
}

fn p_actions(alg: KnAlgebra, dim: usize, weight: impl Fn(usize) -> (u32, u32)) -> Vec<CycMatrix> {
    let n = alg.n();
    let one = alg.xi(0);
    let mut per: Vec<Vec<(usize, usize, CycNum)>> = vec![Vec::new(); (n * n) as usize];
    for r in 0..dim {
        let (a, b) = weight(r);
        per[(a * n + b) as usize].push((r, r, one.clone()));
    }
    per.into_iter().map(|e| unit_at(alg, dim, e)).collect()
}

/// `V(ε,i,m)`: `f·v = f(i,i) v`, `x̂·v = ε v`, `δ(v) = χ_{m,m-2i} ⊗ v`.
pub fn build_v(alg: KnAlgebra, eps: Sign, i: u32, m: u32) -> YDModule {
    let (ii, mm) = (i as i64, m as i64);
    let ap = p_actions(alg, 1, |_| (i, i));
    let ax = unit_at(alg, 1, vec![(0, 0, alg.scalar(eps.value()))]);
    let chi = alg.character_element(alg.character(mm, mm - 2 * ii));
    YDModule::new(alg, ap, ax, vec![vec![(chi, 0)]]).expect("well-formed V")
}

/// `U(i,j,m,t)` without canonicalization or simplicity check.
pub fn build_u_raw(alg: KnAlgebra, i: i64, j: i64, m: i64, t: i64) -> YDModule {
    let (iu, ju) = (alg.z(i), alg.z(j));
    let ap = p_actions(alg, 2, |r| if r == 0 { (iu, ju) } else { (ju, iu) });
    let one = alg.xi(0);
    let ax = unit_at(alg, 2, vec![(0, 1, one.clone()), (1, 0, one)]);
    let c1 = alg.character_element(alg.character(m, t));
    let c2 = alg.character_element(alg.character(t + 2 * i, m - 2 * j));
    YDModule::new(alg, ap, ax, vec![vec![(c1, 0)], vec![(c2, 1)]]).expect("well-formed U")
}

/// `W(ε,i,m)` with basis `w_0..w_{n-1}`: `p_{ab}·w_r = δ_{(a,b),(i+2r,i-2r)} w_r`,
/// `δ(w_r) = Σ_k χ_{m,m-2i} e_{rk} ⊗ w_k`, and the chosen x̂-action.
pub fn build_w_variant(alg: KnAlgebra, eps: Sign, i: u32, m: u32, variant: WVariant) -> YDModule {
    let n = alg.n() as i64;
    let (ii, mm) = (i as i64, m as i64);
    let ap = p_actions(alg, n as usize, |r| (alg.z(ii + 2 * r as i64), alg.z(ii - 2 * r as i64)));
    let e = alg.scalar(eps.value());
    let ax = unit_at(
        alg,
        n as usize,
        (0..n)
            .map(|r| {
                let c = match variant {
                    WVariant::Twisted => &e * &alg.xi(4 * ii * r),
                    WVariant::Plain => e.clone(),
                };
                (md(-r, n as u32) as usize, r as usize, c)
            })
            .collect(),
    );
    let chi = alg.character_element(alg.character(mm, mm - 2 * ii));
    let co = (0..n).map(|r| (0..n).map(|k| (&chi * &alg.comatrix_element(r, k), k as usize)).collect()).collect();
    YDModule::new(alg, ap, ax, co).expect("well-formed W")
}

/// The simple module with the given label.
pub fn build_simple(alg: KnAlgebra, l: SimpleLabel) -> Result<YDModule> {
    let n = alg.n();
    let m = match l {
        SimpleLabel::V { eps, i, m } => build_v(alg, eps, i, m),
        SimpleLabel::U { i, j, m, t } => {
            if super::label::u_is_reducible(n, i as i64, j as i64, m as i64, t as i64) {
                return Err(Error::NonSimpleLabel(l.to_string()));
            }
            build_u_raw(alg, i as i64, j as i64, m as i64, t as i64)
        }
        SimpleLabel::W { eps, i, m } => build_w_variant(alg, eps, i, m, WVariant::Twisted),
    };
    Ok(m.with_label(l))
}
