//! Exhaustive audit of the Hopf axioms on the basis.

use super::{KnAlgebra, KnBasis, KnElement};
use crate::cyclotomic::CycNum;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Basis-level structure maps of a Hopf algebra whose basis products are
/// either zero or another basis element (true for K_n).
pub trait HopfStructure: Sync {
    fn n(&self) -> u32;
    fn basis(&self) -> Vec<KnBasis>;
    fn product(&self, a: KnBasis, b: KnBasis) -> Option<KnBasis>;
    fn coproduct(&self, a: KnBasis) -> Vec<(KnBasis, KnBasis, CycNum)>;
    fn counit(&self, a: KnBasis) -> CycNum;
    fn antipode(&self, a: KnBasis) -> KnElement;
    /// The unit, as a sum of basis elements with coefficient 1.
    fn unit(&self) -> Vec<KnBasis>;
}

impl HopfStructure for KnAlgebra {
    fn n(&self) -> u32 {
        KnAlgebra::n(self)
    }
    fn basis(&self) -> Vec<KnBasis> {
        KnAlgebra::basis(self)
    }
    fn product(&self, a: KnBasis, b: KnBasis) -> Option<KnBasis> {
        super::basis_product(a, b)
    }
    fn coproduct(&self, a: KnBasis) -> Vec<(KnBasis, KnBasis, CycNum)> {
        self.coproduct_basis(a)
    }
    fn counit(&self, a: KnBasis) -> CycNum {
        self.scalar(self.counit_basis(a) as i64)
    }
    fn antipode(&self, a: KnBasis) -> KnElement {
        self.element(self.antipode_basis(a))
    }
    fn unit(&self) -> Vec<KnBasis> {
        self.one().iter().map(|(b, _)| *b).collect()
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    /// First failing basis element or tuple, if any.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HopfReport {
    pub n: u32,
    pub dim: usize,
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

type Tensor2 = BTreeMap<(KnBasis, KnBasis), CycNum>;
type Tensor3 = BTreeMap<(KnBasis, KnBasis, KnBasis), CycNum>;

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

fn first_failure<T: Sync, F>(items: &[T], fail: F) -> Option<String>
where
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    items.par_iter().map(fail).collect::<Vec<_>>().into_iter().flatten().next()
}

fn check(axiom: &str, counterexample: Option<String>) -> AxiomCheck {
    AxiomCheck { axiom: axiom.to_string(), passed: counterexample.is_none(), counterexample }
}

/// Checks every Hopf axiom of `h` on all basis elements (pairs, triples).
pub fn verify_hopf_structure<H: HopfStructure>(h: &H) -> HopfReport {
    let n = h.n();
    let basis = h.basis();
    let zero = CycNum::zero(n).expect("valid conductor");
    let one_s = CycNum::one(n).expect("valid conductor");
    let cop: HashMap<KnBasis, Tensor2> = basis
        .par_iter()
        .map(|b| {
            let mut t = Tensor2::new();
            for (l, r, c) in h.coproduct(*b) {
                add_to(&mut t, (l, r), c);
            }
            (*b, t)
        })
        .collect();
    let partners: HashMap<KnBasis, Vec<KnBasis>> =
        basis.iter().map(|a| (*a, basis.iter().copied().filter(|b| h.product(*a, *b).is_some()).collect())).collect();
    let unit = h.unit();
    let pairs: Vec<(KnBasis, KnBasis)> = basis.iter().flat_map(|a| basis.iter().map(move |b| (*a, *b))).collect();
    let mut checks = Vec::new();

    checks.push(check(
        "associativity",
        first_failure(&pairs, |&(a, b)| {
            for &c in &basis {
                let l = h.product(a, b).and_then(|ab| h.product(ab, c));
                let r = h.product(b, c).and_then(|bc| h.product(a, bc));
                if l != r {
                    return Some(format!("({a} {b}) {c}"));
                }
            }
            None
        }),
    ));

    checks.push(check(
        "unit",
        first_failure(&basis, |&b| {
            let left: Vec<KnBasis> = unit.iter().filter_map(|u| h.product(*u, b)).collect();
            let right: Vec<KnBasis> = unit.iter().filter_map(|u| h.product(b, *u)).collect();
            (left != vec![b] || right != vec![b]).then(|| b.to_string())
        }),
    ));

    checks.push(check(
        "coassociativity",
        first_failure(&basis, |b| {
            let mut l = Tensor3::new();
            let mut r = Tensor3::new();
            for ((x, y), c) in &cop[b] {
                for ((x1, x2), d) in &cop[x] {
                    add_to(&mut l, (*x1, *x2, *y), c * d);
                }
                for ((y1, y2), d) in &cop[y] {
                    add_to(&mut r, (*x, *y1, *y2), c * d);
                }
            }
            (l != r).then(|| b.to_string())
        }),
    ));

    checks.push(check(
        "counit",
        first_failure(&basis, |b| {
            let mut l: BTreeMap<KnBasis, CycNum> = BTreeMap::new();
            let mut r: BTreeMap<KnBasis, CycNum> = BTreeMap::new();
            for ((x, y), c) in &cop[b] {
                add_to(&mut l, *y, &h.counit(*x) * c);
                add_to(&mut r, *x, &h.counit(*y) * c);
            }
            let expect: BTreeMap<KnBasis, CycNum> = [(*b, one_s.clone())].into_iter().collect();
            (l != expect || r != expect).then(|| b.to_string())
        }),
    ));

    checks.push(check(
        "coproduct_multiplicative",
        first_failure(&pairs, |&(a, b)| {
            let lhs = match h.product(a, b) {
                Some(c) => cop[&c].clone(),
                None => Tensor2::new(),
            };
            let mut rhs = Tensor2::new();
            let db = &cop[&b];
            for ((a1, a2), c) in &cop[&a] {
                for b1 in &partners[a1] {
                    for b2 in &partners[a2] {
                        if let Some(d) = db.get(&(*b1, *b2)) {
                            let l = h.product(*a1, *b1).unwrap();
                            let r = h.product(*a2, *b2).unwrap();
                            add_to(&mut rhs, (l, r), c * d);
                        }
                    }
                }
            }
            (lhs != rhs).then(|| format!("Δ({a} {b})"))
        }),
    ));

    checks.push(check("coproduct_unital", {
        let mut lhs = Tensor2::new();
        for u in &unit {
            for (k, c) in &cop[u] {
                add_to(&mut lhs, *k, c.clone());
            }
        }
        let mut rhs = Tensor2::new();
        for u in &unit {
            for v in &unit {
                add_to(&mut rhs, (*u, *v), one_s.clone());
            }
        }
        (lhs != rhs).then(|| "Δ(1)".to_string())
    }));

    checks.push(check(
        "counit_multiplicative",
        first_failure(&pairs, |&(a, b)| {
            let lhs = h.product(a, b).map(|c| h.counit(c)).unwrap_or_else(|| zero.clone());
            (lhs != &h.counit(a) * &h.counit(b)).then(|| format!("ε({a} {b})"))
        }),
    ));

    checks.push(check("counit_unital", {
        let mut e = zero.clone();
        for u in &unit {
            e += &h.counit(*u);
        }
        (!e.is_one()).then(|| "ε(1)".to_string())
    }));

    let antipode_side = |left: bool| {
        first_failure(&basis, |b| {
            let mut acc: BTreeMap<KnBasis, CycNum> = BTreeMap::new();
            for ((x, y), c) in &cop[b] {
                let (s, plain) = if left { (h.antipode(*x), *y) } else { (h.antipode(*y), *x) };
                for (sb, sc) in s.iter() {
                    let prod = if left { h.product(*sb, plain) } else { h.product(plain, *sb) };
                    if let Some(p) = prod {
                        add_to(&mut acc, p, c * sc);
                    }
                }
            }
            let e = h.counit(*b);
            let expect: BTreeMap<KnBasis, CycNum> =
                if e.is_zero() { BTreeMap::new() } else { unit.iter().map(|u| (*u, e.clone())).collect() };
            (acc != expect).then(|| b.to_string())
        })
    };
    checks.push(check("antipode_left", antipode_side(true)));
    checks.push(check("antipode_right", antipode_side(false)));

    HopfReport { n, dim: basis.len(), checks }
}

/// Axiom audit of K_n.
pub fn verify_hopf_axioms(a: &KnAlgebra) -> HopfReport {
    verify_hopf_structure(a)
}

/// `Δ(e_ij) = Σ_r e_ir⊗e_rj` and `ε(e_ij) = δ_ij` for every comatrix element.
pub fn verify_comatrix(a: &KnAlgebra) -> Vec<AxiomCheck> {
    let n = a.n() as i64;
    let pairs: Vec<(i64, i64)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let fail_delta = pairs.par_iter().find_first(|&&(i, j)| {
        let mut rhs = super::TensorElement::zero(a.n());
        for r in 0..n {
            let t = super::TensorElement::outer(&a.comatrix_element(i, r), &a.comatrix_element(r, j));
            for ((l, rr), c) in t.iter() {
                rhs.add_term(*l, *rr, c);
            }
        }
        a.comultiply(&a.comatrix_element(i, j)) != rhs
    });
    let fail_eps = pairs.iter().find(|&&(i, j)| {
        let e = a.counit(&a.comatrix_element(i, j));
        if i == j {
            !e.is_one()
        } else {
            !e.is_zero()
        }
    });
    let check = |axiom: &str, f: Option<&(i64, i64)>| AxiomCheck {
        axiom: axiom.to_string(),
        passed: f.is_none(),
        counterexample: f.map(|(i, j)| format!("e_{{{i},{j}}}")),
    };
    vec![check("comatrix coproduct", fail_delta), check("comatrix counit", fail_eps)]
}
