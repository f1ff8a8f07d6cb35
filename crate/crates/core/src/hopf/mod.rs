//! The Hopf algebra K_n of dimension 2n² with basis `p_{ij}`, `f_{ij} = p_{ij} x̂`.
//!
//! Structure maps on the basis:
//!
//! * `p_{ij} p_{ij} = p_{ij}`, `p_{ij} f_{ij} = f_{ij}`, `f_{ij} p_{ji} = f_{ij}`,
//!   `f_{ij} f_{ji} = p_{ij}`, every other product of two basis elements is 0;
//! * `Δ(p_{ij}) = Σ p_{i'j'} ⊗ p_{i''j''}` over `i'+i''=i`, `j'+j''=j`, and
//!   `Δ(f_{ij})` is the same sum of `f ⊗ f` twisted by `ξ^{i'j''-j'i''}`;
//! * `ε(p_{ij}) = ε(f_{ij}) = δ_{i0}δ_{j0}`;
//! * `S(p_{ij}) = p_{-i,-j}`, `S(f_{ij}) = f_{-j,-i}`.

mod element;
mod verify;

pub use element::{KnElement, TensorElement};
pub use verify::{verify_comatrix, verify_hopf_axioms, verify_hopf_structure, AxiomCheck, HopfReport, HopfStructure};

use crate::cyclotomic::{CycNum, Field};
use crate::error::Result;
use crate::zn::md;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which family a basis element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    P,
    F,
}

/// Basis index `p_{ij}` or `f_{ij}` with `i, j` in `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KnBasis {
    pub kind: Kind,
    pub i: u32,
    pub j: u32,
}

impl KnBasis {
    pub fn p(i: u32, j: u32) -> Self {
        KnBasis { kind: Kind::P, i, j }
    }

    pub fn f(i: u32, j: u32) -> Self {
        KnBasis { kind: Kind::F, i, j }
    }

    /// Position in `basis()`: all `p` first, then all `f`, each row-major.
    pub fn index(&self, n: u32) -> usize {
        let base = if self.kind == Kind::P { 0 } else { (n * n) as usize };
        base + (self.i * n + self.j) as usize
    }
}

impl fmt::Display for KnBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.kind == Kind::P { 'p' } else { 'f' };
        write!(f, "{c}_{{{},{}}}", self.i, self.j)
    }
}

/// Product of two basis elements: either 0 or another basis element.
#[inline]
pub fn basis_product(a: KnBasis, b: KnBasis) -> Option<KnBasis> {
    match (a.kind, b.kind) {
        (Kind::P, Kind::P) => (a.i == b.i && a.j == b.j).then_some(a),
        (Kind::P, Kind::F) => (a.i == b.i && a.j == b.j).then_some(b),
        (Kind::F, Kind::P) => (a.i == b.j && a.j == b.i).then_some(a),
        (Kind::F, Kind::F) => (a.i == b.j && a.j == b.i).then_some(KnBasis::p(a.i, a.j)),
    }
}

/// The Hopf algebra K_n for odd `n >= 3`.
#[derive(Clone, Copy)]
pub struct KnAlgebra {
    field: &'static Field,
}

impl fmt::Debug for KnAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}", self.n())
    }
}

impl PartialEq for KnAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.n() == o.n()
    }
}
impl Eq for KnAlgebra {}

/// A character `χ_{m,t}` of the group Z_n × Z_n, `χ_{m,t}(a^i b^j) = ξ^{mi+tj}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Character {
    pub m: u32,
    pub t: u32,
}

impl KnAlgebra {
    pub fn new(n: u32) -> Result<Self> {
        Ok(KnAlgebra { field: Field::get(n)? })
    }

    pub fn n(&self) -> u32 {
        self.field.n()
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        2 * (self.n() * self.n()) as usize
    }

    /// Reduces an integer index into Z_n.
    pub fn z(&self, x: i64) -> u32 {
        md(x, self.n())
    }

    /// `ξ^k`.
    pub fn xi(&self, k: i64) -> CycNum {
        self.field.powers()[self.z(k) as usize].clone()
    }

    pub fn xi_ref(&self, k: i64) -> &'static CycNum {
        &self.field.powers()[self.z(k) as usize]
    }

    pub fn scalar(&self, v: i64) -> CycNum {
        CycNum::from_int(self.n(), v).expect("valid conductor")
    }

    pub fn zero_scalar(&self) -> CycNum {
        CycNum::zero_in(self.field)
    }

    pub fn p(&self, i: i64, j: i64) -> KnBasis {
        KnBasis::p(self.z(i), self.z(j))
    }

    pub fn f(&self, i: i64, j: i64) -> KnBasis {
        KnBasis::f(self.z(i), self.z(j))
    }

    /// All 2n² basis elements in `KnBasis::index` order.
    pub fn basis(&self) -> Vec<KnBasis> {
        let n = self.n();
        let mut v = Vec::with_capacity(self.dim());
        for kind in [Kind::P, Kind::F] {
            for i in 0..n {
                for j in 0..n {
                    v.push(KnBasis { kind, i, j });
                }
            }
        }
        v
    }

    pub fn element(&self, b: KnBasis) -> KnElement {
        KnElement::basis(self.n(), b, self.xi(0))
    }

    pub fn zero(&self) -> KnElement {
        KnElement::zero(self.n())
    }

    /// `1 = Σ p_{ij}`.
    pub fn one(&self) -> KnElement {
        let n = self.n();
        KnElement::from_terms(n, (0..n * n).map(|k| (KnBasis::p(k / n, k % n), self.xi(0))))
    }

    /// `x̂ = Σ f_{ij}`.
    pub fn x_hat(&self) -> KnElement {
        let n = self.n();
        KnElement::from_terms(n, (0..n * n).map(|k| (KnBasis::f(k / n, k % n), self.xi(0))))
    }

    pub fn character(&self, m: i64, t: i64) -> Character {
        Character { m: self.z(m), t: self.z(t) }
    }

    /// `χ_{m,t}(a^i b^j)`.
    pub fn char_value(&self, chi: Character, i: i64, j: i64) -> CycNum {
        self.xi(chi.m as i64 * i + chi.t as i64 * j)
    }

    /// `χ_{m,t}` as the group-like element `Σ ξ^{mi+tj} p_{ij}`.
    pub fn character_element(&self, chi: Character) -> KnElement {
        let n = self.n() as i64;
        KnElement::from_terms(self.n(), (0..n * n).map(|k| (self.p(k / n, k % n), self.char_value(chi, k / n, k % n))))
    }

    /// Comatrix element `e_{kℓ} = Σ_s ξ^{-2s(k+ℓ)} f_{s+k-ℓ, s-k+ℓ}`.
    pub fn comatrix_element(&self, k: i64, l: i64) -> KnElement {
        let n = self.n() as i64;
        KnElement::from_terms(self.n(), (0..n).map(|s| (self.f(s + k - l, s - k + l), self.xi(-2 * s * (k + l)))))
    }

    /// Coproduct of a basis element as `(left, right, coefficient)` triples.
    pub fn coproduct_basis(&self, b: KnBasis) -> Vec<(KnBasis, KnBasis, CycNum)> {
        let n = self.n() as i64;
        let (i, j) = (b.i as i64, b.j as i64);
        let mut out = Vec::with_capacity((n * n) as usize);
        for i1 in 0..n {
            for j1 in 0..n {
                let (i2, j2) = (i - i1, j - j1);
                match b.kind {
                    Kind::P => out.push((self.p(i1, j1), self.p(i2, j2), self.xi(0))),
                    Kind::F => out.push((self.f(i1, j1), self.f(i2, j2), self.xi(i1 * j2 - j1 * i2))),
                }
            }
        }
        out
    }

    pub fn comultiply(&self, x: &KnElement) -> TensorElement {
        let mut t = TensorElement::zero(self.n());
        for (b, c) in x.iter() {
            for (l, r, k) in self.coproduct_basis(*b) {
                t.add_term(l, r, &(c * &k));
            }
        }
        t
    }

    /// `(Δ ⊗ id)Δ(b)` as `(h1, h2, h3, coefficient)`.
    pub fn coproduct2_basis(&self, b: KnBasis) -> Vec<(KnBasis, KnBasis, KnBasis, CycNum)> {
        let mut out = Vec::new();
        for (l, r, c) in self.coproduct_basis(b) {
            for (l1, l2, d) in self.coproduct_basis(l) {
                out.push((l1, l2, r, &c * &d));
            }
        }
        out
    }

    pub fn counit_basis(&self, b: KnBasis) -> bool {
        b.i == 0 && b.j == 0
    }

    pub fn counit(&self, x: &KnElement) -> CycNum {
        let mut acc = self.zero_scalar();
        for (b, c) in x.iter() {
            if self.counit_basis(*b) {
                acc += c;
            }
        }
        acc
    }

    pub fn antipode_basis(&self, b: KnBasis) -> KnBasis {
        let (i, j) = (b.i as i64, b.j as i64);
        match b.kind {
            Kind::P => self.p(-i, -j),
            Kind::F => self.f(-j, -i),
        }
    }

    pub fn antipode(&self, x: &KnElement) -> KnElement {
        KnElement::from_terms(self.n(), x.iter().map(|(b, c)| (self.antipode_basis(*b), c.clone())))
    }

    pub fn multiply(&self, x: &KnElement, y: &KnElement) -> Result<KnElement> {
        x.try_mul(y)
    }

    /// Adjoint action `h ⇀ z = h₁ z S(h₂)`.
    pub fn adjoint_action(&self, h: &KnElement, z: &KnElement) -> KnElement {
        let mut acc = self.zero();
        for (b, c) in h.iter() {
            for (l, r, k) in self.coproduct_basis(*b) {
                let sr = self.antipode_basis(r);
                let term = z.sandwich(l, sr);
                if !term.is_zero() {
                    acc.add_scaled(&term, &(c * &k));
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_of_basis_elements() {
        let a = KnAlgebra::new(3).unwrap();
        assert_eq!(basis_product(a.p(1, 2), a.p(1, 2)), Some(a.p(1, 2)));
        assert_eq!(basis_product(a.f(1, 2), a.f(2, 1)), Some(a.p(1, 2)));
        assert_eq!(basis_product(a.p(0, 1), a.p(1, 0)), None);
        assert_eq!(basis_product(a.f(1, 2), a.p(2, 1)), Some(a.f(1, 2)));
        assert_eq!(basis_product(a.p(1, 2), a.f(1, 2)), Some(a.f(1, 2)));
    }

    #[test]
    fn antipode_and_counit_examples() {
        let a = KnAlgebra::new(3).unwrap();
        assert_eq!(a.antipode_basis(a.p(1, 2)), a.p(2, 1));
        assert_eq!(a.antipode_basis(a.f(1, 2)), a.f(-2, -1));
        assert!(a.counit(&a.element(a.p(0, 0))).is_one());
        assert!(a.counit(&a.element(a.p(1, 0))).is_zero());
        assert!(a.counit(&a.x_hat()).is_one());
    }

    #[test]
    fn coproduct_of_p00_has_nine_unit_terms() {
        let a = KnAlgebra::new(3).unwrap();
        let d = a.comultiply(&a.element(a.p(0, 0)));
        assert_eq!(d.support_size(), 9);
        for i in 0..3 {
            for j in 0..3 {
                assert!(d.coeff(a.p(i, j), a.p(-i, -j)).is_one());
            }
        }
    }

    #[test]
    fn comatrix_e00() {
        let a = KnAlgebra::new(3).unwrap();
        let e = a.comatrix_element(0, 0);
        let expect = a.element(a.f(0, 0)) + a.element(a.f(1, 1)) + a.element(a.f(2, 2));
        assert_eq!(e, expect);
    }

    #[test]
    fn x_hat_relations() {
        let a = KnAlgebra::new(5).unwrap();
        let x = a.x_hat();
        assert_eq!(&x * &x, a.one());
        for (i, j) in [(1i64, 2i64), (0, 3), (4, 4)] {
            let lhs = &x * &a.element(a.p(i, j));
            let rhs = &a.element(a.p(j, i)) * &x;
            assert_eq!(lhs, rhs);
        }
    }
}
