use crate::cyclotomic::{CycMatrix, CycNum, SparseVec};
use crate::error::{Error, Result};
use crate::hopf::{Kind, KnBasis, KnElement};
use crate::yd::YDModule;
use std::collections::BTreeMap;

/// Nonzero images `(b, b·v_l)` over basis elements of one kind.
fn images(m: &YDModule, kind: Kind, l: usize) -> Vec<(KnBasis, &SparseVec)> {
    let n = m.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let b = KnBasis { kind, i, j };
            let col = m.act_basis_col(b, l);
            if !col.is_empty() {
                out.push((b, col));
            }
        }
    }
    out
}

fn outer(a: &SparseVec, b: &SparseVec, d2: usize, c: &CycNum, acc: &mut BTreeMap<usize, CycNum>) {
    for (r1, v1) in a {
        let t = c * v1;
        for (r2, v2) in b {
            let x = &t * v2;
            let key = r1 * d2 + r2;
            match acc.get_mut(&key) {
                Some(s) => *s += &x,
                None => {
                    acc.insert(key, x);
                }
            }
        }
    }
}

fn flush(acc: BTreeMap<usize, CycNum>, col: usize, out: &mut Vec<(usize, usize, CycNum)>) {
    out.extend(acc.into_iter().filter(|(_, v)| !v.is_zero()).map(|(r, v)| (r, col, v)));
}

/// `M1 ⊗ M2` with `h` acting through `Δ(h)` and `δ(v⊗w) = v₋₁w₋₁ ⊗ v₀⊗w₀`.
///
/// The basis vector `v_j ⊗ w_l` has index `j·dim M2 + l`.
pub fn tensor_module(m1: &YDModule, m2: &YDModule) -> Result<YDModule> {
    if m1.algebra() != m2.algebra() {
        return Err(Error::ConductorMismatch(m1.n(), m2.n()));
    }
    let alg = m1.algebra();
    let n = alg.n();
    let (d1, d2) = (m1.dim(), m2.dim());
    let d = d1 * d2;
    let nn = (n * n) as usize;

    let mut p_entries: Vec<Vec<(usize, usize, CycNum)>> = vec![Vec::new(); nn];
    let mut x_entries = Vec::new();
    let one = alg.xi(0);
    for j in 0..d1 {
        let (p1, f1) = (images(m1, Kind::P, j), images(m1, Kind::F, j));
        for l in 0..d2 {
            let col = j * d2 + l;
            // Δ(p_ab) = Σ p_{a1,b1} ⊗ p_{a-a1,b-b1}
            let mut per: BTreeMap<usize, BTreeMap<usize, CycNum>> = BTreeMap::new();
            for (b1, c1) in &p1 {
                for (b2, c2) in images(m2, Kind::P, l) {
                    let slot = (((b1.i + b2.i) % n) * n + (b1.j + b2.j) % n) as usize;
                    outer(c1, c2, d2, &one, per.entry(slot).or_default());
                }
            }
            for (slot, acc) in per {
                flush(acc, col, &mut p_entries[slot]);
            }
            // x̂ = Σ f_ab and Δ(f_ab) = Σ ξ^{i1 j2 - j1 i2} f_{i1,j1} ⊗ f_{i2,j2}
            let mut acc = BTreeMap::new();
            for (b1, c1) in &f1 {
                for (b2, c2) in images(m2, Kind::F, l) {
                    let tw = alg.xi(b1.i as i64 * b2.j as i64 - b1.j as i64 * b2.i as i64);
                    outer(c1, c2, d2, &tw, &mut acc);
                }
            }
            flush(acc, col, &mut x_entries);
        }
    }
    let ap = p_entries.into_iter().map(|e| CycMatrix::from_triplets(n, d, d, e)).collect::<Result<Vec<_>>>()?;
    let ax = CycMatrix::from_triplets(n, d, d, x_entries)?;

    let mut co = Vec::with_capacity(d);
    for j in 0..d1 {
        for l in 0..d2 {
            let mut entries: Vec<(KnElement, usize)> = Vec::new();
            for (h, k) in m1.coaction(j) {
                for (g, kp) in m2.coaction(l) {
                    entries.push((h.try_mul(g)?, k * d2 + kp));
                }
            }
            co.push(entries);
        }
    }
    YDModule::new(alg, ap, ax, co)
}
