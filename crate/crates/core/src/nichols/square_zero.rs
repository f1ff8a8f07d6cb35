//! Degree-one square-zero elements and presentation checks.

use super::qs::quantum_symmetrizer;
use super::BraidedSpace;
use crate::cyclotomic::{CycMatrix, CycNum, SparseVec};
use crate::error::{Error, Result};
use serde::Serialize;

/// Largest `dim V` accepted by [`square_zero_monomial_space`].
pub const SQUARE_ZERO_MAX_DIM: usize = 8;

/// `x² = 0` in `𝔅²(V)`, i.e. `(id + c)(x⊗x) = 0`.
pub fn is_square_zero(b: &BraidedSpace, v: &[CycNum]) -> Result<bool> {
    if v.len() != b.dim() {
        return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {}", v.len(), b.dim())));
    }
    let vv: Vec<CycNum> = v.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect();
    let cv = b.braid().mul_vec(&vv);
    Ok(vv.iter().zip(&cv).all(|(a, c)| (a + c).is_zero()))
}

/// Solutions of `(id + c)(x⊗x) = 0` written in the symmetric monomials
/// `μ_ab = λ_a λ_b` (`a ≤ b`) of `x = Σ λ_a e_a`.
#[derive(Debug, Clone)]
pub struct SquareZeroSpace {
    pub dim_v: usize,
    /// `(a, b)` for each coordinate, `a ≤ b`, lexicographic.
    pub monomials: Vec<(usize, usize)>,
    /// Basis of the solution space in monomial coordinates.
    pub basis: Vec<Vec<CycNum>>,
    system: CycMatrix,
}

pub fn square_zero_monomial_space(b: &BraidedSpace) -> Result<SquareZeroSpace> {
    let d = b.dim();
    if d > SQUARE_ZERO_MAX_DIM {
        return Err(Error::DimensionBound(format!(
            "square-zero elimination limited to dim V ≤ {SQUARE_ZERO_MAX_DIM}, got {d}"
        )));
    }
    let qs2 = b.braid().try_add(&CycMatrix::identity(b.n(), d * d)?)?;
    let cols = qs2.sparse_cols();
    let mut monomials = Vec::new();
    let mut trip = Vec::new();
    for a in 0..d {
        for c in a..d {
            let k = monomials.len();
            monomials.push((a, c));
            for (r, x) in &cols[a * d + c] {
                trip.push((*r, k, x.clone()));
            }
            if a != c {
                for (r, x) in &cols[c * d + a] {
                    trip.push((*r, k, x.clone()));
                }
            }
        }
    }
    let system = CycMatrix::from_triplets(b.n(), d * d, monomials.len(), trip)?;
    let basis = system.kernel_basis();
    Ok(SquareZeroSpace { dim_v: d, monomials, basis, system })
}

impl SquareZeroSpace {
    fn index(&self, a: usize, c: usize) -> usize {
        let (a, c) = (a.min(c), a.max(c));
        self.monomials.iter().position(|&m| m == (a, c)).expect("monomial in range")
    }

    /// Monomials vanishing on the whole solution space.
    pub fn forced_zero_monomials(&self) -> Vec<(usize, usize)> {
        (0..self.monomials.len())
            .filter(|&k| self.basis.iter().all(|v| v[k].is_zero()))
            .map(|k| self.monomials[k])
            .collect()
    }

    /// Coordinates `λ_a` forced to vanish (`μ_aa ≡ 0`).
    pub fn forced_zero_coordinates(&self) -> Vec<usize> {
        self.forced_zero_monomials().into_iter().filter(|(a, c)| a == c).map(|(a, _)| a).collect()
    }

    /// Monomials vanishing on every rank-one solution: the linearly forced
    /// ones plus every `μ_ab` with `λ_a` or `λ_b` forced to zero.
    pub fn forced_zero_on_rank_one(&self) -> Vec<(usize, usize)> {
        let lin = self.forced_zero_monomials();
        let coords = self.forced_zero_coordinates();
        self.monomials
            .iter()
            .copied()
            .filter(|m| lin.contains(m) || coords.contains(&m.0) || coords.contains(&m.1))
            .collect()
    }

    /// The rank-one profile of `λ` lies in the solution space.
    pub fn contains_profile(&self, lambda: &[CycNum]) -> bool {
        let mu = self.profile(lambda);
        self.system.mul_vec(&mu).iter().all(CycNum::is_zero)
    }

    pub fn profile(&self, lambda: &[CycNum]) -> Vec<CycNum> {
        self.monomials.iter().map(|&(a, c)| &lambda[a] * &lambda[c]).collect()
    }

    /// Veronese equations `μ_aa μ_cc = μ_ac²` (and their 3-term analogues
    /// `μ_aa μ_ce = μ_ac μ_ae`), i.e. `μ` comes from some `λ`.
    pub fn is_rank_one(&self, mu: &[CycNum]) -> bool {
        let d = self.dim_v;
        let m = |a: usize, c: usize| &mu[self.index(a, c)];
        (0..d).all(|a| (0..d).all(|c| (0..d).all(|e| m(a, a) * m(c, e) == m(a, c) * m(a, e))))
    }

    /// Every square-zero `x` lies on the line through `e_axis`.
    pub fn only_axis(&self, axis: usize) -> bool {
        let forced = self.forced_zero_coordinates();
        (0..self.dim_v).filter(|&a| a != axis).all(|a| forced.contains(&a))
    }
}

/// A homogeneous element of `T(V)`: degree and coefficients on row-major words.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorPoly {
    pub degree: usize,
    pub coeffs: SparseVec,
}

impl TensorPoly {
    /// `Σ c · x_{w₁}⋯x_{w_k}` from `(word, coefficient)` pairs; all words share one length.
    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = (Vec<usize>, CycNum)>) -> Result<Self> {
        let mut degree = None;
        let mut v = Vec::new();
        for (w, c) in terms {
            if *degree.get_or_insert(w.len()) != w.len() || w.iter().any(|&x| x >= d) {
                return Err(Error::DimensionMismatch(format!("bad monomial {w:?}")));
            }
            v.push((super::qs::word_index(&w, d), c));
        }
        let degree = degree.ok_or_else(|| Error::DimensionMismatch("empty relation".into()))?;
        Ok(TensorPoly { degree, coeffs: crate::cyclotomic::matrix_internals::canonical_sparse(v) })
    }

    /// Image under `x_a ↦ Σ_b p[b][a] e_b` applied to each tensor factor.
    pub fn substitute(&self, p: &CycMatrix) -> TensorPoly {
        let d = p.rows();
        let cols = p.sparse_cols();
        let mut cur: Vec<(Vec<usize>, CycNum)> = Vec::new();
        for (w, c) in &self.coeffs {
            let digits = super::qs::word_digits(*w, cols.len(), self.degree);
            let mut partial = vec![(Vec::new(), c.clone())];
            for a in digits {
                partial = partial
                    .into_iter()
                    .flat_map(|(pre, x)| {
                        cols[a].iter().map(move |(bb, y)| {
                            let mut q = pre.clone();
                            q.push(*bb);
                            (q, &x * y)
                        })
                    })
                    .collect();
            }
            cur.extend(partial);
        }
        let v = cur.into_iter().map(|(w, c)| (super::qs::word_index(&w, d), c)).collect();
        TensorPoly { degree: self.degree, coeffs: crate::cyclotomic::matrix_internals::canonical_sparse(v) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationReport {
    /// One entry per relation.
    pub in_kernel: Vec<bool>,
    pub kernel_dim_qs2: usize,
    /// Rank of the degree-two relations.
    pub span_rank: usize,
    /// The degree-two relations span `ker QS₂`.
    pub spans_degree_two: bool,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.in_kernel.iter().all(|&x| x) && self.spans_degree_two
    }
}

pub fn presentation_check(b: &BraidedSpace, relations: &[TensorPoly]) -> Result<PresentationReport> {
    let mut by_degree: std::collections::BTreeMap<usize, CycMatrix> = Default::default();
    let mut in_kernel = Vec::with_capacity(relations.len());
    for r in relations {
        if let std::collections::btree_map::Entry::Vacant(e) = by_degree.entry(r.degree) {
            e.insert(quantum_symmetrizer(b, r.degree)?);
        }
        in_kernel.push(by_degree[&r.degree].mul_sparse(&r.coeffs).is_empty());
    }
    let d2 = b.dim() * b.dim();
    let qs2 = quantum_symmetrizer(b, 2)?;
    let kernel_dim_qs2 = d2 - qs2.rank();
    let rows: Vec<SparseVec> = relations.iter().filter(|r| r.degree == 2).map(|r| r.coeffs.clone()).collect();
    let span_rank = CycMatrix::from_sparse_rows(b.n(), d2, rows)?.rank();
    let deg2_in_kernel = relations.iter().zip(&in_kernel).filter(|(r, _)| r.degree == 2).all(|(_, &ok)| ok);
    Ok(PresentationReport {
        in_kernel,
        kernel_dim_qs2,
        span_rank,
        spans_degree_two: deg2_in_kernel && span_rank == kernel_dim_qs2,
    })
}
