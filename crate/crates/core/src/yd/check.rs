//! Module, comodule and Yetter-Drinfeld compatibility checks.

use super::module::YDModule;
use crate::cyclotomic::{CycMatrix, CycNum, SparseVec};
use crate::hopf::{KnBasis, KnElement, TensorElement};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct YdReport {
    pub dim: usize,
    pub module_axioms: bool,
    pub comodule_axioms: bool,
    pub yd_compatibility: bool,
    pub first_failure: Option<String>,
}

impl YdReport {
    pub fn passed(&self) -> bool {
        self.module_axioms && self.comodule_axioms && self.yd_compatibility
    }
}

fn add_to<K: Ord>(m: &mut BTreeMap<K, CycNum>, k: K, c: CycNum) {
    if c.is_zero() {
        return;
    }
    match m.get_mut(&k) {
        Some(x) => {
            *x += &c;
            if x.is_zero() {
                m.remove(&k);
            }
        }
        None => {
            m.insert(k, c);
        }
    }
}

fn apply_cols(m: &YDModule, b: KnBasis, v: &SparseVec) -> BTreeMap<usize, CycNum> {
    let mut out = BTreeMap::new();
    for (l, c) in v {
        for (r, x) in m.act_basis_col(b, *l) {
            add_to(&mut out, *r, c * x);
        }
    }
    out
}

fn module_failure(m: &YDModule) -> Option<String> {
    let alg = m.algebra();
    let basis = alg.basis();
    let one = alg.xi(0);
    // Σ p_{ab} acts as the identity
    for l in 0..m.dim() {
        let mut acc = BTreeMap::new();
        for b in basis.iter().filter(|b| b.kind == crate::hopf::Kind::P) {
            for (r, x) in m.act_basis_col(*b, l) {
                add_to(&mut acc, *r, x.clone());
            }
        }
        let expect: BTreeMap<usize, CycNum> = [(l, one.clone())].into_iter().collect();
        if acc != expect {
            return Some(format!("unit acts non-trivially on v_{l}"));
        }
    }
    let pairs: Vec<(KnBasis, KnBasis)> = basis.iter().flat_map(|g| basis.iter().map(move |h| (*g, *h))).collect();
    pairs
        .par_iter()
        .map(|&(g, h)| {
            let gh = crate::hopf::basis_product(g, h);
            for l in 0..m.dim() {
                let lhs = apply_cols(m, g, m.act_basis_col(h, l));
                let rhs: BTreeMap<usize, CycNum> = match gh {
                    Some(b) => m.act_basis_col(b, l).iter().cloned().collect(),
                    None => BTreeMap::new(),
                };
                if lhs != rhs {
                    return Some(format!("({g}·{h})·v_{l} != {g}·({h}·v_{l})"));
                }
            }
            None
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

/// `C[j]` as a map `k ↦ h_{kj}`.
fn coaction_map(m: &YDModule, j: usize) -> BTreeMap<usize, &KnElement> {
    m.coaction(j).iter().map(|(h, k)| (*k, h)).collect()
}

fn comodule_failure(m: &YDModule) -> Option<String> {
    let alg = m.algebra();
    for j in 0..m.dim() {
        let mut acc = BTreeMap::new();
        for (h, k) in m.coaction(j) {
            add_to(&mut acc, *k, alg.counit(h));
        }
        let expect: BTreeMap<usize, CycNum> = [(j, alg.xi(0))].into_iter().collect();
        if acc != expect {
            return Some(format!("counit fails on v_{j}"));
        }
    }
    (0..m.dim())
        .into_par_iter()
        .map(|j| {
            let cj = coaction_map(m, j);
            for l in 0..m.dim() {
                let lhs = match cj.get(&l) {
                    Some(h) => alg.comultiply(h),
                    None => TensorElement::zero(alg.n()),
                };
                let mut rhs = TensorElement::zero(alg.n());
                for (k, hkj) in &cj {
                    if let Some(hlk) = coaction_map(m, *k).get(&l) {
                        for ((a, b), c) in TensorElement::outer(hkj, hlk).iter() {
                            rhs.add_term(*a, *b, c);
                        }
                    }
                }
                if lhs != rhs {
                    return Some(format!("coassociativity fails on v_{j} at v_{l}"));
                }
            }
            None
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

fn compatibility_failure(m: &YDModule) -> Option<String> {
    let alg = m.algebra();
    let basis = alg.basis();
    basis
        .par_iter()
        .map(|&h| {
            let d2 = alg.coproduct2_basis(h);
            for j in 0..m.dim() {
                // δ(h·v_j)
                let mut lhs: BTreeMap<(KnBasis, usize), CycNum> = BTreeMap::new();
                for (l, a) in m.act_basis_col(h, j) {
                    for (hkl, k) in m.coaction(*l) {
                        for (b, c) in hkl.iter() {
                            add_to(&mut lhs, (*b, *k), a * c);
                        }
                    }
                }
                // h₁ v₋₁ S(h₃) ⊗ h₂·v₀
                let mut rhs: BTreeMap<(KnBasis, usize), CycNum> = BTreeMap::new();
                for (h1, h2, h3, c) in &d2 {
                    let s3 = alg.antipode_basis(*h3);
                    for (hkj, k) in m.coaction(j) {
                        let left = hkj.sandwich(*h1, s3);
                        if left.is_zero() {
                            continue;
                        }
                        let right = m.act_basis_col(*h2, *k);
                        for (b, x) in left.iter() {
                            let cx = c * x;
                            for (r, y) in right {
                                add_to(&mut rhs, (*b, *r), &cx * y);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Some(format!("YD compatibility fails for h = {h}, v_{j}"));
                }
            }
            None
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

/// Checks module axioms on all basis pairs, comodule axioms, and
/// `δ(h·v) = h₁v₋₁S(h₃) ⊗ h₂·v₀` on every basis element and basis vector.
pub fn check_yd(m: &YDModule) -> YdReport {
    let mf = module_failure(m);
    let cf = comodule_failure(m);
    let yf = compatibility_failure(m);
    YdReport {
        dim: m.dim(),
        module_axioms: mf.is_none(),
        comodule_axioms: cf.is_none(),
        yd_compatibility: yf.is_none(),
        first_failure: mf.or(cf).or(yf),
    }
}

/// Whether `f: M1 → M2` (a `dim M2 × dim M1` matrix) commutes with the
/// actions of all `p_{ab}`, `x̂` and intertwines the coactions.
pub fn is_morphism(f: &CycMatrix, m1: &YDModule, m2: &YDModule) -> bool {
    if f.rows() != m2.dim() || f.cols() != m1.dim() || m1.algebra() != m2.algebra() {
        return false;
    }
    let comm = |a1: &CycMatrix, a2: &CycMatrix| f.try_mul(a1).ok() == a2.try_mul(f).ok();
    if !comm(m1.action_x(), m2.action_x()) {
        return false;
    }
    if !m1.action_p_all().iter().zip(m2.action_p_all()).all(|(a, b)| comm(a, b)) {
        return false;
    }
    let fcols = f.sparse_cols();
    for k in 0..m1.dim() {
        // (id ⊗ f) δ(v_k)
        let mut lhs: BTreeMap<(KnBasis, usize), CycNum> = BTreeMap::new();
        for (h, kk) in m1.coaction(k) {
            for (l, fv) in &fcols[*kk] {
                for (b, c) in h.iter() {
                    add_to(&mut lhs, (*b, *l), c * fv);
                }
            }
        }
        // δ(f v_k)
        let mut rhs: BTreeMap<(KnBasis, usize), CycNum> = BTreeMap::new();
        for (l2, fv) in &fcols[k] {
            for (h, l) in m2.coaction(*l2) {
                for (b, c) in h.iter() {
                    add_to(&mut rhs, (*b, *l), c * fv);
                }
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}
