//! Degree-two relation sets for the 3-dimensional dihedral braidings at n = 3.

use super::square_zero::TensorPoly;
use crate::cyclotomic::{cyc, CycMatrix, CycNum};

fn xi(k: i64) -> CycNum {
    cyc(3, k).expect("n = 3")
}

fn poly(terms: &[(&[usize], CycNum)]) -> TensorPoly {
    TensorPoly::from_terms(3, terms.iter().map(|(w, c)| (w.to_vec(), c.clone()))).expect("well-formed words")
}

/// Relations of `𝔅_{ξ^k}` on `w₀, w₁, w₂`:
/// `w₀²`, `w₁w₂`, `w₂w₁`, `ξ^{2k}w₀w₂ + w₂w₀ + ξ^k w₁²`, `ξ^{2k}w₀w₁ + ξ^k w₁w₀ + w₂²`.
///
/// `k = 0` is the presentation of `𝔅(W(-1,0,m))`. For `k = 1, 2` the set
/// annihilates the degree-two kernel of `W(-1,2,2)` and `W(-1,1,1)`
/// respectively; see [`quadratic_target`].
pub fn quadratic_relations_w(k: i64) -> Vec<TensorPoly> {
    let one = xi(0);
    vec![
        poly(&[(&[0, 0], one.clone())]),
        poly(&[(&[1, 2], one.clone())]),
        poly(&[(&[2, 1], one.clone())]),
        poly(&[(&[0, 2], xi(2 * k)), (&[2, 0], one.clone()), (&[1, 1], xi(k))]),
        poly(&[(&[0, 1], xi(2 * k)), (&[1, 0], xi(k)), (&[2, 2], one)]),
    ]
}

/// The W label (n = 3) whose `ker QS₂` is spanned by `quadratic_relations_w(k)`.
pub fn quadratic_target(k: i64) -> (i64, i64) {
    match k.rem_euclid(3) {
        0 => (0, 0),
        1 => (2, 2),
        _ => (1, 1),
    }
}

/// Fomin-Kirillov relations on `x₀, x₁, x₂`: `x_a²`, `x₀x₁ + x₁x₂ + x₂x₀`, `x₀x₂ + x₂x₁ + x₁x₀`.
pub fn fomin_kirillov_relations() -> Vec<TensorPoly> {
    let one = xi(0);
    let mut out: Vec<TensorPoly> = (0..3).map(|a| poly(&[(&[a, a], one.clone())])).collect();
    out.push(poly(&[(&[0, 1], one.clone()), (&[1, 2], one.clone()), (&[2, 0], one.clone())]));
    out.push(poly(&[(&[0, 2], one.clone()), (&[2, 1], one.clone()), (&[1, 0], one)]));
    out
}

/// Columns `x_k = Σ_a ξ^{ka} w_a`, as a substitution matrix for [`TensorPoly::substitute`].
pub fn x_basis(n: u32) -> CycMatrix {
    let e =
        (0..n as usize).flat_map(|k| (0..n as usize).map(move |a| (a, k, cyc(n, (k * a) as i64).expect("valid n"))));
    CycMatrix::from_triplets(n, n as usize, n as usize, e.collect::<Vec<_>>()).expect("square")
}
