//! The space of Yetter-Drinfeld morphisms between two modules, as the kernel
//! of one linear system in the matrix entries `F_{lk}` of `F: S → M`.

use super::module::YDModule;
use crate::cyclotomic::matrix_internals::{canonical_sparse, rref_rows};
use crate::cyclotomic::{CycMatrix, CycNum, SparseVec};
use crate::hopf::KnBasis;
use std::collections::{BTreeMap, HashMap};

struct System {
    /// unknown index ↦ (l, k)
    unknowns: Vec<(usize, usize)>,
    rows: Vec<SparseVec>,
}

fn assemble(s: &YDModule, m: &YDModule) -> System {
    let (ds, dm) = (s.dim(), m.dim());
    // When both modules are weight-graded, a morphism preserves weights, so
    // only same-weight entries can be nonzero and the p_{ab} equations hold
    // automatically for them.
    let graded = match (s.weights(), m.weights()) {
        (Some(ws), Some(wm)) => Some((ws, wm)),
        _ => None,
    };
    let mut unknowns = Vec::new();
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    for l in 0..dm {
        for k in 0..ds {
            let live = graded.as_ref().map_or(true, |(ws, wm)| wm[l] == ws[k]);
            if live {
                index.insert((l, k), unknowns.len());
                unknowns.push((l, k));
            }
        }
    }
    let mut rows = Vec::new();
    let mut commute = |a_s: &CycMatrix, a_m: &CycMatrix| {
        // (F A_S - A_M F)_{lk} = Σ_{k'} F_{lk'} A_S[k'][k] - Σ_{l'} A_M[l][l'] F_{l'k}
        let scols = a_s.sparse_cols();
        let mrows = a_m.sparse_rows();
        for l in 0..dm {
            for k in 0..ds {
                let mut row = Vec::new();
                for (kp, v) in &scols[k] {
                    if let Some(&u) = index.get(&(l, *kp)) {
                        row.push((u, v.clone()));
                    }
                }
                for (lp, v) in &mrows[l] {
                    if let Some(&u) = index.get(&(*lp, k)) {
                        row.push((u, -v));
                    }
                }
                let row = canonical_sparse(row);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    };
    commute(s.action_x(), m.action_x());
    if graded.is_none() {
        for (a, b) in s.action_p_all().iter().zip(m.action_p_all()) {
            commute(a, b);
        }
    }
    // coaction: Σ_{k'} C^S_{k'k}(x) F_{lk'} - Σ_{l'} F_{l'k} C^M_{ll'}(x) = 0
    for k in 0..ds {
        let mut eqs: BTreeMap<(KnBasis, usize), Vec<(usize, CycNum)>> = BTreeMap::new();
        for (h, kp) in s.coaction(k) {
            for l in 0..dm {
                if let Some(&u) = index.get(&(l, *kp)) {
                    for (b, c) in h.iter() {
                        eqs.entry((*b, l)).or_default().push((u, c.clone()));
                    }
                }
            }
        }
        for lp in 0..dm {
            if let Some(&u) = index.get(&(lp, k)) {
                for (h, l) in m.coaction(lp) {
                    for (b, c) in h.iter() {
                        eqs.entry((*b, *l)).or_default().push((u, -c));
                    }
                }
            }
        }
        for (_, row) in eqs {
            let row = canonical_sparse(row);
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    System { unknowns, rows }
}

/// `dim Hom(S, M)` in the category of Yetter-Drinfeld modules.
pub fn hom_dimension(s: &YDModule, m: &YDModule) -> usize {
    let sys = assemble(s, m);
    let nu = sys.unknowns.len();
    if nu == 0 {
        return 0;
    }
    nu - rref_rows(nu, sys.rows).rank()
}

/// A basis of `Hom(S, M)`, each morphism a `dim M × dim S` matrix.
pub fn hom_space(s: &YDModule, m: &YDModule) -> Vec<CycMatrix> {
    let sys = assemble(s, m);
    let nu = sys.unknowns.len();
    if nu == 0 {
        return Vec::new();
    }
    let field = s.algebra().field();
    rref_rows(nu, sys.rows)
        .kernel(field)
        .into_iter()
        .map(|v| {
            let entries = v.into_iter().map(|(u, c)| (sys.unknowns[u].0, sys.unknowns[u].1, c));
            CycMatrix::from_triplets(s.n(), m.dim(), s.dim(), entries).expect("shape")
        })
        .collect()
}

/// For simple modules: equal dimension and a nonzero morphism.
pub fn is_isomorphic(m1: &YDModule, m2: &YDModule) -> bool {
    m1.dim() == m2.dim() && hom_dimension(m1, m2) >= 1
}
