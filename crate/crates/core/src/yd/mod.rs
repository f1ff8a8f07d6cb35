//! Simple Yetter-Drinfeld modules over K_n: constructors, axiom checks, the
//! categorical braiding, morphism spaces and the classification census.
//!
//! The simples are `V(ε,i,m)` (dimension 1), `U(i,j,m,t)` (dimension 2) and
//! `W(ε,i,m)` (dimension n). For W the x̂-action is `x̂·w_r = ε ξ^{4ir} w_{-r}`;
//! the untwisted variant `ε w_{-r}` is available through `build_w_variant`
//! and fails the compatibility check whenever `i ≠ 0`.

mod check;
mod hom;
mod label;
mod module;

pub use check::{check_yd, is_morphism, YdReport};
pub use hom::{hom_dimension, hom_space, is_isomorphic};
pub use label::{canonical_u, u_is_reducible, u_partner, Sign, SimpleLabel};
pub use module::{build_simple, build_u_raw, build_v, build_w_variant, WVariant, YDModule};

use crate::cyclotomic::CycMatrix;
use crate::error::{Error, Result};
use crate::hopf::KnAlgebra;
use crate::nichols::BraidedSpace;

/// Matrix of `c_{V,W}(v⊗w) = v₋₁·w ⊗ v₀`.
///
/// Columns index `v_j ⊗ w_l` as `j·dim W + l`, rows index `w_l' ⊗ v_k` as
/// `l'·dim V + k`.
pub fn braiding(mv: &YDModule, mw: &YDModule) -> Result<CycMatrix> {
    if mv.algebra() != mw.algebra() {
        return Err(Error::ConductorMismatch(mv.n(), mw.n()));
    }
    let (dv, dw) = (mv.dim(), mw.dim());
    let mut entries = Vec::new();
    for j in 0..dv {
        for l in 0..dw {
            let col = j * dw + l;
            for (h, k) in mv.coaction(j) {
                for (lp, c) in mw.act_col(h, l) {
                    entries.push((lp * dv + k, col, c));
                }
            }
        }
    }
    CycMatrix::from_triplets(mv.n(), dw * dv, dv * dw, entries)
}

/// The braided vector space `(M, c_{M,M})`.
pub fn braided_space(m: &YDModule) -> BraidedSpace {
    BraidedSpace::new(braiding(m, m).expect("same algebra")).expect("square braiding")
}

/// All simple labels: V's, then canonical U's, then W's, each sorted.
pub fn list_simples(alg: &KnAlgebra) -> Vec<SimpleLabel> {
    let n = alg.n();
    let mut out = Vec::new();
    for eps in [Sign::Plus, Sign::Minus] {
        for i in 0..n {
            for m in 0..n {
                out.push(SimpleLabel::V { eps, i, m });
            }
        }
    }
    let mut us = Vec::new();
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            for m in 0..n as i64 {
                for t in 0..n as i64 {
                    if u_is_reducible(n, i, j, m, t) {
                        continue;
                    }
                    let c = canonical_u(n, i, j, m, t);
                    if c == (i as u32, j as u32, m as u32, t as u32) {
                        us.push(SimpleLabel::U { i: c.0, j: c.1, m: c.2, t: c.3 });
                    }
                }
            }
        }
    }
    out.extend(us);
    for eps in [Sign::Plus, Sign::Minus] {
        for i in 0..n {
            for m in 0..n {
                out.push(SimpleLabel::W { eps, i, m });
            }
        }
    }
    out.sort();
    out
}

/// `count` distinct simple labels drawn with a seeded ChaCha8 stream, in catalog order.
pub fn sample_simples(alg: &KnAlgebra, seed: u64, count: usize) -> Vec<SimpleLabel> {
    use rand::SeedableRng;
    let all = list_simples(alg);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut idx = rand::seq::index::sample(&mut rng, all.len(), count.min(all.len())).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|k| all[k]).collect()
}

/// `Σ (dim S)²` over all simple labels.
pub fn dimension_census(alg: &KnAlgebra) -> u64 {
    list_simples(alg).iter().map(|l| (l.dim(alg.n()) as u64).pow(2)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_counts() {
        for n in [3u32, 5, 7] {
            let a = KnAlgebra::new(n).unwrap();
            let ls = list_simples(&a);
            let (n64, u) = (n as u64, ls.iter().filter(|l| matches!(l, SimpleLabel::U { .. })).count() as u64);
            assert_eq!(u, n64.pow(3) * (n64 - 1) / 2 + n64 * n64 * (n64 - 1) / 2);
            assert_eq!(ls.iter().filter(|l| matches!(l, SimpleLabel::W { .. })).count() as u64, 2 * n64 * n64);
            assert_eq!(dimension_census(&a), 4 * n64.pow(4));
        }
        assert_eq!(dimension_census(&KnAlgebra::new(3).unwrap()), 324);
    }
}
