//! Set-theoretical solutions of the braid equation, racks, their cocycles,
//! and the linearized braidings they produce.

use crate::cyclotomic::{cyc, CycMatrix, CycNum};
use crate::error::{Error, Result};
use crate::nichols::BraidedSpace;
use crate::yd::Sign;
use crate::zn::md;
use serde::Serialize;

fn is_perm(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    v.iter().all(|&x| x < v.len() && !std::mem::replace(&mut seen[x], true))
}

fn inverse_perm(v: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; v.len()];
    for (a, &b) in v.iter().enumerate() {
        inv[b] = a;
    }
    inv
}

/// A set-theoretical solution `s(x,y) = (g_x(y), f_y(x))` on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedSet {
    size: usize,
    /// `g[x][y] = g_x(y)`.
    g: Vec<Vec<usize>>,
    /// `f[y][x] = f_y(x)`.
    f: Vec<Vec<usize>>,
}

impl BraidedSet {
    /// Builds from `s`, checking that `s` is a bijection solving the braid equation.
    pub fn from_fn(size: usize, s: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let mut g = vec![vec![0; size]; size];
        let mut f = vec![vec![0; size]; size];
        let mut hit = vec![false; size * size];
        for x in 0..size {
            for y in 0..size {
                let (a, b) = s(x, y);
                if a >= size || b >= size {
                    return Err(Error::NotBraidedSet(format!("s({x},{y}) = ({a},{b}) out of range")));
                }
                if std::mem::replace(&mut hit[a * size + b], true) {
                    return Err(Error::NotBraidedSet(format!("s is not injective at ({a},{b})")));
                }
                g[x][y] = a;
                f[y][x] = b;
            }
        }
        let out = BraidedSet { size, g, f };
        if let Some((x, y, z)) = out.braid_failure() {
            return Err(Error::NotBraidedSet(format!("braid equation fails at ({x},{y},{z})")));
        }
        Ok(out)
    }

    /// `s(ℓ,r) = (-r, ℓ+2r)` on Z_n.
    pub fn dihedral_solution(n: u32) -> Self {
        Self::from_fn(n as usize, |l, r| (md(-(r as i64), n) as usize, md(l as i64 + 2 * r as i64, n) as usize))
            .expect("s(ℓ,r) = (-r, ℓ+2r) solves the braid equation")
    }

    pub fn flip(size: usize) -> Self {
        Self::from_fn(size, |x, y| (y, x)).expect("the flip is a solution")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn s(&self, x: usize, y: usize) -> (usize, usize) {
        (self.g[x][y], self.f[y][x])
    }

    pub fn g(&self, x: usize, y: usize) -> usize {
        self.g[x][y]
    }

    pub fn f(&self, y: usize, x: usize) -> usize {
        self.f[y][x]
    }

    pub fn is_non_degenerate(&self) -> bool {
        self.g.iter().all(|r| is_perm(r)) && self.f.iter().all(|r| is_perm(r))
    }

    fn braid_failure(&self) -> Option<(usize, usize, usize)> {
        let s12 = |(a, b, c): (usize, usize, usize)| {
            let (p, q) = self.s(a, b);
            (p, q, c)
        };
        let s23 = |(a, b, c): (usize, usize, usize)| {
            let (p, q) = self.s(b, c);
            (a, p, q)
        };
        for x in 0..self.size {
            for y in 0..self.size {
                for z in 0..self.size {
                    let t = (x, y, z);
                    if s12(s23(s12(t))) != s23(s12(s23(t))) {
                        return Some(t);
                    }
                }
            }
        }
        None
    }
}

/// A rack on `0..size`, `op[x][y] = x▷y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rack {
    op: Vec<Vec<usize>>,
}

impl Rack {
    /// Checks that each `x▷-` is a bijection and `▷` is self-distributive.
    pub fn new(op: Vec<Vec<usize>>) -> Result<Self> {
        let size = op.len();
        if let Some(x) = (0..size).find(|&x| op[x].len() != size || !is_perm(&op[x])) {
            return Err(Error::NotRack(format!("{x}▷- is not a bijection")));
        }
        for x in 0..size {
            for y in 0..size {
                for z in 0..size {
                    if op[x][op[y][z]] != op[op[x][y]][op[x][z]] {
                        return Err(Error::NotRack(format!("self-distributivity fails at ({x},{y},{z})")));
                    }
                }
            }
        }
        Ok(Rack { op })
    }

    pub fn size(&self) -> usize {
        self.op.len()
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x][y]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.op
    }
}

/// `x▷y = 2x - y` on Z_n.
pub fn dihedral_rack(n: u32) -> Result<Rack> {
    if n < 3 {
        return Err(Error::InvalidConductor(n as i64));
    }
    let op = (0..n as i64).map(|x| (0..n as i64).map(|y| md(2 * x - y, n) as usize).collect()).collect();
    Rack::new(op)
}

/// `x▷y = y`.
pub fn trivial_rack(size: usize) -> Rack {
    Rack { op: vec![(0..size).collect(); size] }
}

/// `x▷y = f_x(g_{f_y^{-1}(x)}(y))`.
pub fn derived_rack(b: &BraidedSet) -> Result<Rack> {
    if !b.is_non_degenerate() {
        return Err(Error::Degenerate);
    }
    let finv: Vec<Vec<usize>> = b.f.iter().map(|r| inverse_perm(r)).collect();
    let op = (0..b.size).map(|x| (0..b.size).map(|y| b.f(x, b.g(finv[y][x], y))).collect()).collect();
    Rack::new(op)
}

/// Nonzero scalars indexed by `X × X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleTable {
    n: u32,
    values: Vec<Vec<CycNum>>,
}

impl CocycleTable {
    pub fn from_fn(n: u32, size: usize, v: impl Fn(usize, usize) -> CycNum) -> Result<Self> {
        let values: Vec<Vec<CycNum>> = (0..size).map(|x| (0..size).map(|y| v(x, y)).collect()).collect();
        if values.iter().flatten().any(CycNum::is_zero) {
            return Err(Error::DivisionByZero);
        }
        Ok(CocycleTable { n, values })
    }

    pub fn constant(n: u32, size: usize, c: CycNum) -> Result<Self> {
        Self::from_fn(n, size, |_, _| c.clone())
    }

    pub fn get(&self, x: usize, y: usize) -> &CycNum {
        &self.values[x][y]
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Copy with one entry multiplied by `ξ`.
    pub fn perturbed(&self, x: usize, y: usize) -> Self {
        let mut out = self.clone();
        out.values[x][y] = &out.values[x][y] * &cyc(self.n, 1).expect("valid conductor");
        out
    }
}

fn size_check(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch(format!("table of size {b} on a set of size {a}")));
    }
    Ok(())
}

fn first_triple(size: usize, bad: impl Fn(usize, usize, usize) -> bool) -> Option<(usize, usize, usize)> {
    (0..size)
        .flat_map(|x| (0..size).flat_map(move |y| (0..size).map(move |z| (x, y, z))))
        .find(|&(x, y, z)| bad(x, y, z))
}

fn f_cocycle_failure(b: &BraidedSet, f: &CocycleTable) -> Option<(usize, usize, usize)> {
    let v = |x: usize, y: usize| f.get(x, y);
    first_triple(b.size, |x, y, z| {
        let l = v(x, y) * v(b.f(y, x), z) * v(b.g(x, y), b.g(b.f(y, x), z));
        let r = v(y, z) * v(x, b.g(y, z)) * v(b.f(b.g(y, z), x), b.f(z, y));
        l != r
    })
}

fn rack_cocycle_failure(r: &Rack, q: &CocycleTable) -> Option<(usize, usize, usize)> {
    first_triple(r.size(), |x, y, z| q.get(x, r.op(y, z)) * q.get(y, z) != q.get(r.op(x, y), r.op(x, z)) * q.get(x, z))
}

/// `F_{x,y}F_{f_y(x),z}F_{g_x(y),g_{f_y(x)}(z)} = F_{y,z}F_{x,g_y(z)}F_{f_{g_y(z)}(x),f_z(y)}`.
pub fn check_f_cocycle(b: &BraidedSet, f: &CocycleTable) -> bool {
    b.size == f.size() && f_cocycle_failure(b, f).is_none()
}

/// `q_{x,y▷z} q_{y,z} = q_{x▷y,x▷z} q_{x,z}`.
pub fn check_rack_cocycle(r: &Rack, q: &CocycleTable) -> bool {
    r.size() == q.size() && rack_cocycle_failure(r, q).is_none()
}

/// `c^q(x⊗y) = q_{x,y} (x▷y)⊗x`.
pub fn cq_braiding(r: &Rack, q: &CocycleTable) -> Result<BraidedSpace> {
    size_check(r.size(), q.size())?;
    if let Some(t) = rack_cocycle_failure(r, q) {
        return Err(Error::CocycleViolated(format!("{t:?}")));
    }
    let d = r.size();
    let e = (0..d).flat_map(|x| (0..d).map(move |y| (r.op(x, y) * d + x, x * d + y, q.get(x, y).clone())));
    BraidedSpace::new(CycMatrix::from_triplets(q.n(), d * d, d * d, e.collect::<Vec<_>>())?)
}

/// `s^F(x⊗y) = F_{x,y} g_x(y)⊗f_y(x)`.
pub fn sf_braiding(b: &BraidedSet, f: &CocycleTable) -> Result<BraidedSpace> {
    size_check(b.size, f.size())?;
    if let Some(t) = f_cocycle_failure(b, f) {
        return Err(Error::CocycleViolated(format!("{t:?}")));
    }
    let d = b.size;
    let e = (0..d).flat_map(|x| {
        (0..d).map(move |y| {
            let (p, q) = b.s(x, y);
            (p * d + q, x * d + y, f.get(x, y).clone())
        })
    });
    BraidedSpace::new(CycMatrix::from_triplets(f.n(), d * d, d * d, e.collect::<Vec<_>>())?)
}

/// `q_{x,y} = F_{f_y^{-1}(x), y}`, after checking `q_{f_z(x),f_z(y)} = q_{x,y}`.
pub fn t_equivalence_cocycle(b: &BraidedSet, f: &CocycleTable) -> Result<CocycleTable> {
    size_check(b.size, f.size())?;
    if !b.is_non_degenerate() {
        return Err(Error::Degenerate);
    }
    let finv: Vec<Vec<usize>> = b.f.iter().map(|r| inverse_perm(r)).collect();
    let q = CocycleTable::from_fn(f.n(), b.size, |x, y| f.get(finv[y][x], y).clone())?;
    if let Some((x, y, z)) = first_triple(b.size, |x, y, z| q.get(b.f(z, x), b.f(z, y)) != q.get(x, y)) {
        return Err(Error::InvarianceFails(format!("x={x}, y={y}, z={z}")));
    }
    Ok(q)
}

/// Outcome of the twist-equivalence identities for a candidate `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwistReport {
    /// The four-term identity for `φ` on the derived rack.
    pub phi_cocycle: bool,
    /// `φ(x,y) F_{f_y⁻¹(x),y} = φ(x▷y,x) G_{f_y⁻¹(x),y}`.
    pub rack_form: bool,
    /// `φ(f_y(x),y) F_{x,y} = φ(f_x(g_x(y)),x) G_{x,y}`.
    pub rewritten_form: bool,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.phi_cocycle && self.rack_form && self.rewritten_form
    }
}

pub fn twist_equivalence_check(
    b: &BraidedSet,
    f: &CocycleTable,
    g: &CocycleTable,
    phi: &CocycleTable,
) -> Result<TwistReport> {
    for t in [f, g, phi] {
        size_check(b.size, t.size())?;
    }
    let r = derived_rack(b)?;
    let op = |x, y| r.op(x, y);
    let p = |x, y| phi.get(x, y);
    let phi_cocycle = first_triple(b.size, |x, y, z| {
        let yz = op(y, z);
        let xyz = op(x, yz);
        let l = p(x, z) * p(op(x, y), op(x, z)) * p(xyz, x) * p(yz, y);
        let rr = p(y, z) * p(x, yz) * p(xyz, op(x, y)) * p(op(x, z), x);
        l != rr
    })
    .is_none();
    let finv: Vec<Vec<usize>> = b.f.iter().map(|row| inverse_perm(row)).collect();
    let pairs = || (0..b.size).flat_map(|x| (0..b.size).map(move |y| (x, y)));
    let rack_form = pairs().all(|(x, y)| {
        let u = finv[y][x];
        p(x, y) * f.get(u, y) == p(op(x, y), x) * g.get(u, y)
    });
    let rewritten_form = pairs().all(|(x, y)| p(b.f(y, x), y) * f.get(x, y) == p(b.f(x, b.g(x, y)), x) * g.get(x, y));
    Ok(TwistReport { phi_cocycle, rack_form, rewritten_form })
}

fn xi(n: u32, k: i64) -> CycNum {
    cyc(n, k).expect("valid conductor")
}

fn signed(n: u32, eps: Sign, k: i64) -> CycNum {
    let x = xi(n, k);
    if eps == Sign::Minus {
        -x
    } else {
        x
    }
}

/// `ε ξ^{2i(m-i) - 4i(ℓ+r)}`: the scalars of the categorical braiding of `W(ε,i,m)`.
pub fn w_cocycle(n: u32, eps: Sign, i: i64, m: i64) -> CocycleTable {
    CocycleTable::from_fn(n, n as usize, |l, r| signed(n, eps, 2 * i * (m - i) - 4 * i * (l + r) as i64))
        .expect("units")
}

/// `ε ξ^{2i(m-i-ℓ-r)}`, the printed form of the same scalars.
pub fn w_cocycle_printed(n: u32, eps: Sign, i: i64, m: i64) -> CocycleTable {
    CocycleTable::from_fn(n, n as usize, |l, r| signed(n, eps, 2 * i * (m - i - l as i64 - r as i64))).expect("units")
}

/// `ε ξ^{2i(m-i) - 4i(ℓ-r)}`, the rack cocycle t-equivalent to [`w_cocycle`].
pub fn w_rack_cocycle(n: u32, eps: Sign, i: i64, m: i64) -> CocycleTable {
    CocycleTable::from_fn(n, n as usize, |l, r| signed(n, eps, 2 * i * (m - i) - 4 * i * (l as i64 - r as i64)))
        .expect("units")
}

/// `ε ξ^{2i(m-i-(ℓ-r))}`, the rack cocycle t-equivalent to [`w_cocycle_printed`].
pub fn w_rack_cocycle_printed(n: u32, eps: Sign, i: i64, m: i64) -> CocycleTable {
    CocycleTable::from_fn(n, n as usize, |l, r| signed(n, eps, 2 * i * (m - i - (l as i64 - r as i64)))).expect("units")
}

/// `φ(ℓ,r) = ξ^{s(i-k)(ℓ-2r)}`; `s = 1` pairs with the printed scalars, `s = 2` with the categorical ones.
pub fn twist_phi(n: u32, i: i64, k: i64, s: i64) -> CocycleTable {
    CocycleTable::from_fn(n, n as usize, |l, r| xi(n, s * (i - k) * (l as i64 - 2 * r as i64))).expect("units")
}
