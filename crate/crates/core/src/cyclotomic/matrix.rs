use super::{CycNum, Field};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no zeros.
pub type SparseVec = Vec<(usize, CycNum)>;

/// Matrix over Q(ξ_n).
///
/// Stored row-sparse when fewer than a quarter of the entries are nonzero and
/// dense otherwise; the storage choice is invisible through the API.
#[derive(Clone)]
pub struct CycMatrix {
    field: &'static Field,
    rows: usize,
    cols: usize,
    data: Storage,
}

#[derive(Clone)]
enum Storage {
    Dense(Vec<CycNum>),
    Sparse(Vec<SparseVec>),
}

/// Row-reduced echelon form: `rows[k]` has leading 1 in column `pivots[k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref {
    pub cols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

/// Affine solution set `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSpace {
    pub particular: Vec<CycNum>,
    pub kernel: Vec<Vec<CycNum>>,
}

/// `a - s*b` on sparse vectors.
pub fn axpy_sub(a: &SparseVec, s: &CycNum, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(s * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(s * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale_row(r: &SparseVec, s: &CycNum) -> SparseVec {
    r.iter().map(|(c, v)| (*c, v * s)).collect()
}

/// Sorts, merges duplicate indices and drops zeros.
pub fn canonical_sparse(mut v: Vec<(usize, CycNum)>) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx += &x,
            _ => out.push((c, x)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// Full row reduction of sparse rows, pivoting on the first row (in original
/// order) with a nonzero entry in each column.
pub fn rref_rows(cols: usize, rows: Vec<SparseVec>) -> Rref {
    let mut buckets: BTreeMap<usize, Vec<(usize, SparseVec)>> = BTreeMap::new();
    for (id, r) in rows.into_iter().enumerate() {
        if let Some(&(lead, _)) = r.first() {
            buckets.entry(lead).or_default().push((id, r));
        }
    }
    let mut pivots = Vec::new();
    let mut prows: Vec<SparseVec> = Vec::new();
    while let Some((col, mut group)) = buckets.pop_first() {
        group.sort_by_key(|e| e.0);
        let (_, prow) = group.remove(0);
        let inv = prow[0].1.inv().expect("leading entry is nonzero");
        let prow = scale_row(&prow, &inv);
        let reduce = |(id, r): (usize, SparseVec)| {
            let s = r[0].1.clone();
            (id, axpy_sub(&r, &s, &prow))
        };
        let reduced: Vec<(usize, SparseVec)> = if group.len() > 8 {
            group.into_par_iter().map(reduce).collect()
        } else {
            group.into_iter().map(reduce).collect()
        };
        for (id, r) in reduced {
            if let Some(&(lead, _)) = r.first() {
                debug_assert!(lead > col);
                buckets.entry(lead).or_default().push((id, r));
            }
        }
        pivots.push(col);
        prows.push(prow);
    }
    // back substitution, last pivot first
    for k in (0..prows.len()).rev() {
        let pc = pivots[k];
        let (head, tail) = prows.split_at_mut(k);
        let prow = &tail[0];
        let work = |r: &mut SparseVec| {
            if let Ok(pos) = r.binary_search_by_key(&pc, |e| e.0) {
                let s = r[pos].1.clone();
                *r = axpy_sub(r, &s, prow);
            }
        };
        if head.len() > 32 {
            head.par_iter_mut().for_each(work);
        } else {
            head.iter_mut().for_each(work);
        }
    }
    Rref { cols, pivots, rows: prows }
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Kernel of the reduced matrix, returned in reduced echelon form.
    pub fn kernel(&self, field: &'static Field) -> Vec<SparseVec> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut col_entries: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); self.cols];
        for (k, r) in self.rows.iter().enumerate() {
            for (c, v) in r.iter().skip(1) {
                col_entries[*c].push((self.pivots[k], -v));
            }
        }
        let one = CycNum::from_parts_one(field);
        let vecs: Vec<SparseVec> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = std::mem::take(&mut col_entries[f]);
                v.push((f, one.clone()));
                canonical_sparse(v)
            })
            .collect();
        rref_rows(self.cols, vecs).rows
    }
}

impl CycNum {
    pub(crate) fn from_parts_one(field: &'static Field) -> CycNum {
        field.powers()[0].clone()
    }
}

impl CycMatrix {
    fn pack(field: &'static Field, rows: usize, cols: usize, sparse: Vec<SparseVec>) -> Self {
        let nnz: usize = sparse.iter().map(Vec::len).sum();
        let data = if rows * cols > 0 && nnz * 4 >= rows * cols {
            let zero = CycNum::zero_in(field);
            let mut d = vec![zero; rows * cols];
            for (r, row) in sparse.into_iter().enumerate() {
                for (c, v) in row {
                    d[r * cols + c] = v;
                }
            }
            Storage::Dense(d)
        } else {
            Storage::Sparse(sparse)
        };
        CycMatrix { field, rows, cols, data }
    }

    /// Builds from canonical sparse rows (increasing column, no zeros).
    pub fn from_sparse_rows(n: u32, cols: usize, rows: Vec<SparseVec>) -> Result<Self> {
        let field = Field::get(n)?;
        let r = rows.len();
        let rows = rows.into_iter().map(canonical_sparse).collect::<Vec<_>>();
        if rows.iter().flatten().any(|e| e.0 >= cols || e.1.n() != n) {
            return Err(Error::DimensionMismatch("entry outside matrix or wrong conductor".into()));
        }
        Ok(Self::pack(field, r, cols, rows))
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(
        n: u32,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, CycNum)>,
    ) -> Result<Self> {
        let mut rs: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch(format!("entry ({r},{c}) outside {rows}x{cols}")));
            }
            rs[r].push((c, v));
        }
        Self::from_sparse_rows(n, cols, rs)
    }

    pub fn from_dense(n: u32, rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let sparse = rows.into_iter().map(|r| r.into_iter().enumerate().filter(|e| !e.1.is_zero()).collect()).collect();
        Self::from_sparse_rows(n, cols, sparse)
    }

    pub fn zeros(n: u32, rows: usize, cols: usize) -> Result<Self> {
        Ok(Self::pack(Field::get(n)?, rows, cols, vec![Vec::new(); rows]))
    }

    pub fn identity(n: u32, size: usize) -> Result<Self> {
        let field = Field::get(n)?;
        let one = CycNum::from_parts_one(field);
        Ok(Self::pack(field, size, size, (0..size).map(|i| vec![(i, one.clone())]).collect()))
    }

    pub fn n(&self) -> u32 {
        self.field.n()
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.data, Storage::Sparse(_))
    }

    pub fn nnz(&self) -> usize {
        match &self.data {
            Storage::Dense(d) => d.iter().filter(|v| !v.is_zero()).count(),
            Storage::Sparse(s) => s.iter().map(Vec::len).sum(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> CycNum {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match &self.data {
            Storage::Dense(d) => d[r * self.cols + c].clone(),
            Storage::Sparse(s) => match s[r].binary_search_by_key(&c, |e| e.0) {
                Ok(p) => s[r][p].1.clone(),
                Err(_) => CycNum::zero_in(self.field),
            },
        }
    }

    /// Nonzero entries of row `r`.
    pub fn row(&self, r: usize) -> SparseVec {
        match &self.data {
            Storage::Dense(d) => d[r * self.cols..(r + 1) * self.cols]
                .iter()
                .enumerate()
                .filter(|e| !e.1.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
            Storage::Sparse(s) => s[r].clone(),
        }
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    /// Nonzero entries of column `c` as `(row, value)`.
    pub fn col(&self, c: usize) -> SparseVec {
        (0..self.rows)
            .filter_map(|r| {
                let v = self.get(r, c);
                (!v.is_zero()).then_some((r, v))
            })
            .collect()
    }

    /// Column-major sparse view: `cols()[c]` lists `(row, value)`.
    pub fn sparse_cols(&self) -> Vec<SparseVec> {
        let mut out = vec![Vec::new(); self.cols];
        for r in 0..self.rows {
            for (c, v) in self.row(r) {
                out[c].push((r, v));
            }
        }
        out
    }

    /// Row-major dense listing.
    pub fn to_dense(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn transpose(&self) -> CycMatrix {
        Self::pack(self.field, self.cols, self.rows, self.sparse_cols())
    }

    pub fn try_mul(&self, o: &CycMatrix) -> Result<CycMatrix> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        if self.n() != o.n() {
            return Err(Error::ConductorMismatch(self.n(), o.n()));
        }
        let orows = o.sparse_rows();
        let rows: Vec<SparseVec> = (0..self.rows)
            .into_par_iter()
            .map(|r| {
                let mut acc: BTreeMap<usize, CycNum> = BTreeMap::new();
                for (k, a) in self.row(r) {
                    for (c, b) in &orows[k] {
                        let t = &a * b;
                        acc.entry(*c).and_modify(|x| *x += &t).or_insert(t);
                    }
                }
                acc.into_iter().filter(|e| !e.1.is_zero()).collect()
            })
            .collect();
        Ok(Self::pack(self.field, self.rows, o.cols, rows))
    }

    fn combine(&self, o: &CycMatrix, sub: bool) -> Result<CycMatrix> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch("shapes differ".into()));
        }
        if self.n() != o.n() {
            return Err(Error::ConductorMismatch(self.n(), o.n()));
        }
        let one = CycNum::from_parts_one(self.field);
        let s = if sub { -&one } else { one };
        let rows = (0..self.rows).map(|r| axpy_sub(&self.row(r), &(-&s), &o.row(r))).collect();
        Ok(Self::pack(self.field, self.rows, self.cols, rows))
    }

    pub fn try_add(&self, o: &CycMatrix) -> Result<CycMatrix> {
        self.combine(o, false)
    }

    pub fn try_sub(&self, o: &CycMatrix) -> Result<CycMatrix> {
        self.combine(o, true)
    }

    pub fn scale(&self, s: &CycNum) -> CycMatrix {
        let rows = (0..self.rows).map(|r| if s.is_zero() { Vec::new() } else { scale_row(&self.row(r), s) }).collect();
        Self::pack(self.field, self.rows, self.cols, rows)
    }

    /// Kronecker product `self ⊗ o`; row index `r1 * o.rows + r2`.
    pub fn kron(&self, o: &CycMatrix) -> CycMatrix {
        let orows = o.sparse_rows();
        let mut rows = Vec::with_capacity(self.rows * o.rows);
        for r1 in 0..self.rows {
            let a = self.row(r1);
            for orow in &orows {
                let mut row = Vec::with_capacity(a.len() * orow.len());
                for (c1, x) in &a {
                    for (c2, y) in orow {
                        row.push((c1 * o.cols + c2, x * y));
                    }
                }
                rows.push(row);
            }
        }
        Self::pack(self.field, self.rows * o.rows, self.cols * o.cols, rows)
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = CycNum::zero_in(self.field);
                for (c, a) in self.row(r) {
                    if !v[c].is_zero() {
                        acc += &(&a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Applies the matrix to a sparse vector.
    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let cols = self.sparse_cols();
        let mut out = Vec::new();
        for (c, x) in v {
            for (r, a) in &cols[*c] {
                out.push((*r, a * x));
            }
        }
        canonical_sparse(out)
    }

    pub fn rref(&self) -> Rref {
        rref_rows(self.cols, self.sparse_rows())
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of `{v : M v = 0}` in reduced echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<CycNum>> {
        self.kernel_sparse().into_iter().map(|v| densify(self.field, self.cols, &v)).collect()
    }

    pub fn kernel_sparse(&self) -> Vec<SparseVec> {
        self.rref().kernel(self.field)
    }

    /// Solutions of `M x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[CycNum]) -> Result<Option<SolutionSpace>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let rows = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r);
                if !b[r].is_zero() {
                    row.push((self.cols, b[r].clone()));
                }
                row
            })
            .collect();
        let red = rref_rows(self.cols + 1, rows);
        if red.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut particular = vec![CycNum::zero_in(self.field); self.cols];
        for (k, r) in red.rows.iter().enumerate() {
            if let Some((c, v)) = r.last() {
                if *c == self.cols {
                    particular[red.pivots[k]] = v.clone();
                }
            }
        }
        Ok(Some(SolutionSpace { particular, kernel: self.kernel_basis() }))
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<CycMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let d = self.rows;
        let one = CycNum::from_parts_one(self.field);
        let rows = (0..d)
            .map(|r| {
                let mut row = self.row(r);
                row.push((d + r, one.clone()));
                row
            })
            .collect();
        let red = rref_rows(2 * d, rows);
        if red.rank() != d || red.pivots.iter().any(|&p| p >= d) {
            return None;
        }
        let inv = red
            .rows
            .into_iter()
            .map(|r| r.into_iter().filter(|e| e.0 >= d).map(|(c, v)| (c - d, v)).collect())
            .collect();
        Some(Self::pack(self.field, d, d, inv))
    }

    /// `true` when every column has at most one nonzero entry and every row
    /// at most one, i.e. a scaled permutation pattern.
    pub fn is_monomial(&self) -> bool {
        let mut seen = vec![false; self.cols];
        for r in 0..self.rows {
            let row = self.row(r);
            if row.len() > 1 {
                return false;
            }
            for (c, _) in row {
                if seen[c] {
                    return false;
                }
                seen[c] = true;
            }
        }
        true
    }
}

pub fn densify(field: &'static Field, len: usize, v: &SparseVec) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero_in(field); len];
    for (c, x) in v {
        out[*c] = x.clone();
    }
    out
}

impl PartialEq for CycMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.n() == o.n()
            && self.rows == o.rows
            && self.cols == o.cols
            && (0..self.rows).all(|r| self.row(r) == o.row(r))
    }
}

impl std::fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CycMatrix {}x{} over Q(ξ_{})", self.rows, self.cols, self.n())?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl serde::Serialize for CycMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_dense().serialize(s)
    }
}
