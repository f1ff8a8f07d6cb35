use super::FusionDecomposition;
use crate::cyclotomic::CycMatrix;
use crate::hopf::KnAlgebra;
use crate::yd::{canonical_u, u_is_reducible, Sign, SimpleLabel};
use crate::zn::{half, md, quarter};

/// Equivalence on Z_n × Z_n indexing the two-dimensional summands of `W₀⊗W₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZnRelation {
    /// `(r,k) ~ (-r,-k)`.
    Antipodal,
    /// Every pair is its own class.
    Discrete,
}

/// Index conventions for the closed-form rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FusionReading {
    /// Use `t₁+t₁` instead of `t₁+t₂` for the last index of the first U
    /// summand in `U·U`.
    pub uu_doubled_t1: bool,
    pub zn: ZnRelation,
}

impl Default for FusionReading {
    fn default() -> Self {
        FusionReading { uu_doubled_t1: false, zn: ZnRelation::Antipodal }
    }
}

impl FusionReading {
    pub fn literal() -> Self {
        FusionReading { uu_doubled_t1: true, zn: ZnRelation::Discrete }
    }
}

/// Class representatives of Z_n × Z_n under the given relation, sorted.
pub fn zn_orbits(n: u32, rel: ZnRelation) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for r in 0..n as i64 {
        for k in 0..n as i64 {
            let a = (md(r, n), md(k, n));
            let keep = match rel {
                ZnRelation::Discrete => true,
                ZnRelation::Antipodal => a <= (md(-r, n), md(-k, n)),
            };
            if keep {
                out.push(a);
            }
        }
    }
    out
}

type U4 = (i64, i64, i64, i64);

struct Acc {
    n: u32,
    out: FusionDecomposition,
}

impl Acc {
    fn u(&mut self, (i, j, m, t): U4) {
        let n = self.n;
        if u_is_reducible(n, i, j, m, t) {
            self.out.add(SimpleLabel::v(n, Sign::Plus, i, m), 1);
            self.out.add(SimpleLabel::v(n, Sign::Minus, i, m), 1);
        } else {
            let (i, j, m, t) = canonical_u(n, i, j, m, t);
            self.out.add(SimpleLabel::U { i, j, m, t }, 1);
        }
    }

    /// `u·w₀ = w⁺ + w⁻` with indices `((i+j)/2, (2i+m+t)/2)`.
    fn u_w0(&mut self, (i, j, m, t): U4) {
        let n = self.n;
        let (wi, wm) = (half(i + j, n) as i64, half(2 * i + m + t, n) as i64);
        for e in [Sign::Plus, Sign::Minus] {
            self.out.add(SimpleLabel::w(n, e, wi, wm), 1);
        }
    }
}

fn vu((i1, m1): (i64, i64), (i2, j2, m2, t2): U4) -> U4 {
    (i1 + i2, i1 + j2, m1 + m2, -2 * i1 + m1 + t2)
}

fn uu(a: U4, b: U4, doubled: bool) -> [U4; 2] {
    let (i1, j1, m1, t1) = a;
    let (i2, j2, m2, t2) = b;
    let last = if doubled { t1 + t1 } else { t1 + t2 };
    [(i1 + i2, j1 + j2, m1 + m2, last), (i1 + j2, j1 + i2, m1 + 2 * i2 + t2, t1 - 2 * j2 + m2)]
}

fn as_u(l: SimpleLabel) -> U4 {
    match l {
        SimpleLabel::U { i, j, m, t } => (i as i64, j as i64, m as i64, t as i64),
        _ => unreachable!("caller matched a U label"),
    }
}

/// Closed-form product of two simple labels, with the corrected reading.
pub fn closed_form_fuse(n: u32, l1: SimpleLabel, l2: SimpleLabel) -> FusionDecomposition {
    closed_form_fuse_with(n, l1, l2, FusionReading::default())
}

/// Closed-form product of two simple labels. W labels are rewritten as
/// `W(ε,i,m) = V(ε,i,m)·w₀` and the products are expanded through
/// `V·V`, `V·U`, `U·U`, `U·w₀` and `w₀·w₀`.
pub fn closed_form_fuse_with(n: u32, l1: SimpleLabel, l2: SimpleLabel, rd: FusionReading) -> FusionDecomposition {
    use SimpleLabel::*;
    let (a, b) = if l1 <= l2 { (l1, l2) } else { (l2, l1) };
    let mut acc = Acc { n, out: FusionDecomposition::new() };
    let vi = |i: u32, m: u32| (i as i64, m as i64);
    match (a, b) {
        (V { eps: e1, i: i1, m: m1 }, V { eps: e2, i: i2, m: m2 }) => {
            acc.out.add(SimpleLabel::v(n, e1 * e2, (i1 + i2) as i64, (m1 + m2) as i64), 1);
        }
        (V { i, m, .. }, u @ U { .. }) => acc.u(vu(vi(i, m), as_u(u))),
        (V { eps: e1, i: i1, m: m1 }, W { eps: e2, i: i2, m: m2 }) => {
            acc.out.add(SimpleLabel::w(n, e1 * e2, (i1 + i2) as i64, (m1 + m2) as i64), 1);
        }
        (u1 @ U { .. }, u2 @ U { .. }) => {
            for x in uu(as_u(u1), as_u(u2), rd.uu_doubled_t1) {
                acc.u(x);
            }
        }
        (u @ U { .. }, W { i, m, .. }) => {
            // V(ε,i,m)·U is simple whenever U is.
            acc.u_w0(vu(vi(i, m), as_u(u)));
        }
        (W { eps: e1, i: i1, m: m1 }, W { eps: e2, i: i2, m: m2 }) => {
            let (e, i, m) = (e1 * e2, (i1 + i2) as i64, (m1 + m2) as i64);
            acc.out.add(SimpleLabel::v(n, e, i, m), 1);
            for (r, k) in zn_orbits(n, rd.zn) {
                if (r, k) == (0, 0) {
                    continue;
                }
                let (r, k) = (r as i64, k as i64);
                let hr = half(r, n) as i64;
                acc.u(vu((i, m), (-4 * k, 4 * k, 4 * k - hr, 4 * k + hr)));
            }
        }
        _ => unreachable!("labels are ordered V < U < W"),
    }
    acc.out
}

/// The map `φ: U(i',i',m',m'-2i') ⊗ W₀ → U(i,j,m,t) ⊗ W₀` with
/// `i' = (i+j)/2`, `m' = (m+t+2i)/2`, `D = (i-j)/4`, `M = m-t-i-j`:
/// `u'₁⊗w_r ↦ ξ^{-rM} u₁⊗w_{r-D}` and `u'₂⊗w_r ↦ ξ^{rM-2D(i+j)} u₂⊗w_{r+D}`.
///
/// Also returns `(i', m')`. Basis order on both sides is `u_a ⊗ w_r ↦ a·n + r`.
pub fn u_w0_isomorphism(alg: KnAlgebra, i: i64, j: i64, m: i64, t: i64) -> (CycMatrix, (i64, i64)) {
    let n = alg.n();
    let nn = n as usize;
    let ip = half(i + j, n) as i64;
    let mp = half(m + t + 2 * i, n) as i64;
    let d = quarter(i - j, n) as i64;
    let big_m = m - t - i - j;
    let mut e = Vec::with_capacity(2 * nn);
    for r in 0..n as i64 {
        e.push((md(r - d, n) as usize, r as usize, alg.xi(-r * big_m)));
        e.push((nn + md(r + d, n) as usize, nn + r as usize, alg.xi(r * big_m - 2 * d * (i + j))));
    }
    (CycMatrix::from_triplets(n, 2 * nn, 2 * nn, e).expect("shape"), (ip, mp))
}
