use super::{basis_product, Kind, KnBasis};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse element of K_n; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KnElement {
    n: u32,
    terms: BTreeMap<KnBasis, CycNum>,
}

/// Basis elements `b` with `a·b ≠ 0`.
#[inline]
pub(crate) fn right_partners(a: KnBasis) -> [KnBasis; 2] {
    match a.kind {
        Kind::P => [KnBasis::p(a.i, a.j), KnBasis::f(a.i, a.j)],
        Kind::F => [KnBasis::p(a.j, a.i), KnBasis::f(a.j, a.i)],
    }
}

impl KnElement {
    pub fn zero(n: u32) -> Self {
        KnElement { n, terms: BTreeMap::new() }
    }

    pub fn basis(n: u32, b: KnBasis, c: CycNum) -> Self {
        let mut e = Self::zero(n);
        e.add_term(b, &c);
        e
    }

    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (KnBasis, CycNum)>) -> Self {
        let mut e = Self::zero(n);
        for (b, c) in terms {
            e.add_term(b, &c);
        }
        e
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = (&KnBasis, &CycNum)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, b: KnBasis) -> Option<&CycNum> {
        self.terms.get(&b)
    }

    /// Coefficient of `b` (zero when absent).
    pub fn coeff(&self, b: KnBasis) -> CycNum {
        self.terms.get(&b).cloned().unwrap_or_else(|| CycNum::zero(self.n).expect("valid conductor"))
    }

    pub fn add_term(&mut self, b: KnBasis, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        debug_assert!(b.i < self.n && b.j < self.n);
        match self.terms.get_mut(&b) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &KnElement, c: &CycNum) {
        for (b, x) in other.iter() {
            self.add_term(*b, &(x * c));
        }
    }

    pub fn scale(&self, c: &CycNum) -> KnElement {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        KnElement { n: self.n, terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect() }
    }

    pub fn try_mul(&self, o: &KnElement) -> Result<KnElement> {
        if self.n != o.n {
            return Err(Error::ConductorMismatch(self.n, o.n));
        }
        let mut out = Self::zero(self.n);
        for (a, ca) in self.iter() {
            for b in right_partners(*a) {
                if let Some(cb) = o.terms.get(&b) {
                    let prod = basis_product(*a, b).expect("partners multiply");
                    out.add_term(prod, &(ca * cb));
                }
            }
        }
        Ok(out)
    }

    /// `l · self · r` for basis elements `l`, `r`.
    pub fn sandwich(&self, l: KnBasis, r: KnBasis) -> KnElement {
        let mut out = Self::zero(self.n);
        for b in right_partners(l) {
            if let Some(c) = self.terms.get(&b) {
                let lb = basis_product(l, b).unwrap();
                if let Some(z) = basis_product(lb, r) {
                    out.add_term(z, c);
                }
            }
        }
        out
    }

    pub fn try_add(&self, o: &KnElement) -> Result<KnElement> {
        if self.n != o.n {
            return Err(Error::ConductorMismatch(self.n, o.n));
        }
        let mut out = self.clone();
        for (b, c) in o.iter() {
            out.add_term(*b, c);
        }
        Ok(out)
    }
}

impl Add for &KnElement {
    type Output = KnElement;
    fn add(self, o: &KnElement) -> KnElement {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}
impl Add for KnElement {
    type Output = KnElement;
    fn add(self, o: KnElement) -> KnElement {
        &self + &o
    }
}
impl Neg for &KnElement {
    type Output = KnElement;
    fn neg(self) -> KnElement {
        KnElement { n: self.n, terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect() }
    }
}
impl Sub for &KnElement {
    type Output = KnElement;
    fn sub(self, o: &KnElement) -> KnElement {
        self + &(-o)
    }
}
impl Mul for &KnElement {
    type Output = KnElement;
    fn mul(self, o: &KnElement) -> KnElement {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for KnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(b, c)| format!("({c}){b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for KnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KnElement[n={}]({self})", self.n)
    }
}

/// Sparse element of K_n ⊗ K_n.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    n: u32,
    terms: BTreeMap<(KnBasis, KnBasis), CycNum>,
}

impl TensorElement {
    pub fn zero(n: u32) -> Self {
        TensorElement { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add_term(&mut self, l: KnBasis, r: KnBasis, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(l, r)) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&(l, r));
                }
            }
            None => {
                self.terms.insert((l, r), c.clone());
            }
        }
    }

    pub fn coeff(&self, l: KnBasis, r: KnBasis) -> CycNum {
        self.terms.get(&(l, r)).cloned().unwrap_or_else(|| CycNum::zero(self.n).expect("valid conductor"))
    }

    pub fn get(&self, l: KnBasis, r: KnBasis) -> Option<&CycNum> {
        self.terms.get(&(l, r))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(KnBasis, KnBasis), &CycNum)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `a ⊗ b` for elements `a`, `b`.
    pub fn outer(a: &KnElement, b: &KnElement) -> TensorElement {
        let mut t = Self::zero(a.n());
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                t.add_term(*x, *y, &(c * d));
            }
        }
        t
    }

    /// Componentwise product in the algebra K_n ⊗ K_n.
    pub fn mul(&self, o: &TensorElement) -> TensorElement {
        let mut t = Self::zero(self.n);
        for ((a1, a2), c) in self.iter() {
            for b1 in right_partners(*a1) {
                for b2 in right_partners(*a2) {
                    if let Some(d) = o.terms.get(&(b1, b2)) {
                        let l = basis_product(*a1, b1).unwrap();
                        let r = basis_product(*a2, b2).unwrap();
                        t.add_term(l, r, &(c * d));
                    }
                }
            }
        }
        t
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|((l, r), c)| format!("({c}){l}⊗{r}")).collect();
        write!(f, "TensorElement[n={}]({})", self.n, if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}
