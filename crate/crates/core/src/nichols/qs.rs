//! Quantum symmetrizers through the factorization
//! `QS_k = (id + c_{k-1} + c_{k-2}c_{k-1} + ⋯ + c_1⋯c_{k-1}) ∘ (QS_{k-1} ⊗ id)`,
//! evaluated column by column and reduced one braid-orbit block at a time.

use super::BraidedSpace;
use crate::cyclotomic::matrix_internals::{canonical_sparse, rref_rows};
use crate::cyclotomic::{CycMatrix, CycNum, SparseVec};
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Rough heap cost of one stored matrix entry.
const ENTRY_BYTES: u64 = 192;
const DEFAULT_MEMORY_MB: u64 = 4096;

/// Memory cap in MB from `KN_MEMORY_MB`, defaulting to 4096.
pub fn memory_limit_mb() -> u64 {
    std::env::var("KN_MEMORY_MB").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MEMORY_MB)
}

fn guard(what: impl FnOnce() -> String, bytes: u64, limit_mb: u64) -> Result<()> {
    let needed_mb = bytes.div_ceil(1 << 20);
    if needed_mb > limit_mb {
        return Err(Error::MemoryExceeded { what: what(), needed_mb, limit_mb });
    }
    Ok(())
}

fn words(d: usize, k: usize, limit_mb: u64) -> Result<usize> {
    let w = (d as u64).checked_pow(k as u32).filter(|&w| w < u32::MAX as u64);
    match w {
        Some(w) => {
            guard(|| format!("V^(⊗{k}) index tables"), w * 16, limit_mb)?;
            Ok(w as usize)
        }
        None => {
            Err(Error::MemoryExceeded { what: format!("V^(⊗{k}) with dim V = {d}"), needed_mb: u64::MAX, limit_mb })
        }
    }
}

fn add_sparse(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push(b[j].clone());
            j += 1;
        } else {
            let v = &a[i].1 + &b[j].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

struct Engine {
    d: usize,
    /// Columns of the braiding on `V⊗V`.
    c: Vec<SparseVec>,
}

impl Engine {
    fn new(b: &BraidedSpace) -> Self {
        Engine { d: b.dim(), c: b.braid().sparse_cols() }
    }

    /// `c` acting on tensor factors `p, p+1` (0-based) of `V^{⊗k}`.
    fn apply_c(&self, k: usize, p: usize, v: &SparseVec) -> SparseVec {
        let d2 = self.d * self.d;
        let lo = self.d.pow((k - 2 - p) as u32);
        let mut out = Vec::with_capacity(v.len() * 2);
        for (w, x) in v {
            let (hi, pair, low) = (w / (d2 * lo), (w / lo) % d2, w % lo);
            for (q, c) in &self.c[pair] {
                out.push((hi * d2 * lo + q * lo + low, x * c));
            }
        }
        canonical_sparse(out)
    }

    /// Column `w` of `QS_k` from the columns of `QS_{k-1}`.
    fn column(&self, k: usize, prev: &[SparseVec], w: usize) -> SparseVec {
        let a = w % self.d;
        let mut z: SparseVec = prev[w / self.d].iter().map(|(u, x)| (u * self.d + a, x.clone())).collect();
        let mut acc = z.clone();
        for p in (0..k - 1).rev() {
            z = self.apply_c(k, p, &z);
            acc = add_sparse(&acc, &z);
        }
        acc
    }

    /// Connected components of words under the supports of all `c_p`.
    fn blocks(&self, k: usize, nw: usize) -> Vec<Vec<usize>> {
        let mut parent: Vec<u32> = (0..nw as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                let g = parent[parent[x as usize] as usize];
                parent[x as usize] = g;
                x = g;
            }
            x
        }
        let d2 = self.d * self.d;
        for p in 0..k.saturating_sub(1) {
            let lo = self.d.pow((k - 2 - p) as u32);
            for w in 0..nw {
                let (hi, pair, low) = (w / (d2 * lo), (w / lo) % d2, w % lo);
                for (q, _) in &self.c[pair] {
                    let t = hi * d2 * lo + q * lo + low;
                    let (ra, rb) = (find(&mut parent, w as u32), find(&mut parent, t as u32));
                    if ra != rb {
                        parent[ra.max(rb) as usize] = ra.min(rb);
                    }
                }
            }
        }
        let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for w in 0..nw {
            let r = find(&mut parent, w as u32);
            groups.entry(r).or_default().push(w);
        }
        groups.into_values().collect()
    }
}

/// Columns of `QS_1, …, QS_k`, stopping early once a level vanishes.
/// Returns the last computed level and its degree.
struct Levels {
    cols: Vec<SparseVec>,
    k: usize,
}

fn next_level(e: &Engine, prev: &Levels, limit_mb: u64) -> Result<Levels> {
    let k = prev.k + 1;
    let nw = words(e.d, k, limit_mb)?;
    let nnz_prev: u64 = prev.cols.iter().map(|c| c.len() as u64).sum();
    guard(|| format!("QS_{k} columns"), (nnz_prev * (k as u64) * e.d as u64).saturating_mul(ENTRY_BYTES), limit_mb)?;
    let cols: Vec<SparseVec> = (0..nw).into_par_iter().map(|w| e.column(k, &prev.cols, w)).collect();
    Ok(Levels { cols, k })
}

fn level_one(e: &Engine, n: u32) -> Result<Levels> {
    let one = crate::cyclotomic::cyc(n, 0)?;
    Ok(Levels { cols: (0..e.d).map(|w| vec![(w, one.clone())]).collect(), k: 1 })
}

/// `QS_k = Σ_{σ ∈ S_k} ρ(M(σ))` as a `d^k × d^k` matrix.
pub fn quantum_symmetrizer(b: &BraidedSpace, k: usize) -> Result<CycMatrix> {
    quantum_symmetrizer_limited(b, k, memory_limit_mb())
}

pub fn quantum_symmetrizer_limited(b: &BraidedSpace, k: usize, limit_mb: u64) -> Result<CycMatrix> {
    if k == 0 {
        return Err(Error::InvalidCutoff(0));
    }
    let e = Engine::new(b);
    let mut lv = level_one(&e, b.n())?;
    while lv.k < k {
        lv = next_level(&e, &lv, limit_mb)?;
    }
    let nw = lv.cols.len();
    let trip = lv.cols.into_iter().enumerate().flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, v)));
    CycMatrix::from_triplets(b.n(), nw, nw, trip.collect::<Vec<_>>())
}

/// Rank of `QS_k` and optionally a basis of its kernel in reduced echelon form.
fn reduce_level(e: &Engine, lv: &Levels, n: u32, with_kernel: bool, limit_mb: u64) -> Result<(usize, Vec<SparseVec>)> {
    let nw = lv.cols.len();
    let blocks = e.blocks(lv.k, nw);
    // Fill-in is bounded by the square of the block and in practice by a
    // small multiple of the block's own entries.
    let est: u64 = blocks
        .iter()
        .map(|bl| {
            let nnz: u64 = bl.iter().map(|&w| lv.cols[w].len() as u64).sum();
            (bl.len() as u64).pow(2).min(3 * nnz) + nnz
        })
        .sum();
    guard(|| format!("row reduction of QS_{}", lv.k), est.saturating_mul(ENTRY_BYTES), limit_mb)?;
    let field = crate::cyclotomic::Field::get(n)?;
    let parts: Vec<(usize, Vec<SparseVec>)> = blocks
        .par_iter()
        .map(|bl| {
            let local = |w: usize| bl.binary_search(&w).expect("columns stay inside their block");
            let mut rows: Vec<SparseVec> = vec![Vec::new(); bl.len()];
            for (j, &w) in bl.iter().enumerate() {
                for (r, v) in &lv.cols[w] {
                    rows[local(*r)].push((j, v.clone()));
                }
            }
            let rr = rref_rows(bl.len(), rows);
            let kernel = if with_kernel {
                rr.kernel(field).into_iter().map(|v| v.into_iter().map(|(j, x)| (bl[j], x)).collect()).collect()
            } else {
                Vec::new()
            };
            (rr.rank(), kernel)
        })
        .collect();
    let rank = parts.iter().map(|p| p.0).sum();
    let mut kernel: Vec<SparseVec> = parts.into_iter().flat_map(|p| p.1).collect();
    kernel.sort_by_key(|v| v.first().map_or(usize::MAX, |e| e.0));
    Ok((rank, kernel))
}

/// Outcome of a graded dimension computation.
#[derive(Debug, Clone, PartialEq)]
pub enum NicholsStatus {
    /// Some degree vanished: `total = Σ dims`, `top_degree` = last nonzero degree.
    Finite { total: usize, top_degree: usize },
    /// No vanishing degree up to `cutoff`.
    Undetermined { cutoff: usize },
    /// A vector with `c(v⊗v) = v⊗v` exists.
    Infinite { witness: Vec<CycNum> },
}

#[derive(Debug, Clone)]
pub struct NicholsOptions {
    pub cutoff: usize,
    pub relations: bool,
    pub memory_mb: u64,
}

impl NicholsOptions {
    pub fn new(cutoff: usize) -> Self {
        NicholsOptions { cutoff, relations: true, memory_mb: memory_limit_mb() }
    }
}

/// Graded dimensions of the Nichols algebra up to a cutoff.
#[derive(Debug, Clone)]
pub struct GradedReport {
    pub dim: usize,
    pub cutoff: usize,
    /// `dims[k] = rank QS_k`; the list ends at the first zero or at the cutoff.
    pub dims: Vec<usize>,
    /// Kernel bases of `QS_k` (keyed by degree) when requested.
    pub relations: Option<BTreeMap<usize, Vec<SparseVec>>>,
    pub status: NicholsStatus,
    pub note: Option<String>,
}

/// `dim 𝔅^k(V) = rank QS_k` for `k ≤ cutoff`, with kernels.
pub fn graded_dims(b: &BraidedSpace, cutoff: usize) -> Result<GradedReport> {
    graded_dims_with(b, &NicholsOptions::new(cutoff))
}

pub fn graded_dims_with(b: &BraidedSpace, opts: &NicholsOptions) -> Result<GradedReport> {
    if opts.cutoff < 2 {
        return Err(Error::InvalidCutoff(opts.cutoff));
    }
    let e = Engine::new(b);
    let mut dims = vec![1];
    let mut rels = BTreeMap::new();
    let mut lv = level_one(&e, b.n())?;
    dims.push(b.dim());
    while lv.k < opts.cutoff && *dims.last().expect("nonempty") > 0 {
        lv = next_level(&e, &lv, opts.memory_mb)?;
        let (rank, kernel) = reduce_level(&e, &lv, b.n(), opts.relations, opts.memory_mb)?;
        dims.push(rank);
        if opts.relations {
            rels.insert(lv.k, kernel);
        }
    }
    let status = match dims.iter().position(|&x| x == 0) {
        Some(z) => NicholsStatus::Finite { total: dims.iter().sum(), top_degree: z - 1 },
        None => NicholsStatus::Undetermined { cutoff: opts.cutoff },
    };
    let note = (b.dim() == 1 && b.braid().get(0, 0).is_one())
        .then(|| "symmetric line: the Nichols algebra is a polynomial ring".to_string());
    Ok(GradedReport {
        dim: b.dim(),
        cutoff: opts.cutoff,
        dims,
        relations: opts.relations.then_some(rels),
        status,
        note,
    })
}

impl GradedReport {
    pub fn total(&self) -> Option<usize> {
        match self.status {
            NicholsStatus::Finite { total, .. } => Some(total),
            _ => None,
        }
    }

    pub fn top_degree(&self) -> Option<usize> {
        match self.status {
            NicholsStatus::Finite { top_degree, .. } => Some(top_degree),
            _ => None,
        }
    }

    /// Replaces an undetermined status by `Infinite` when a witness is known.
    pub fn with_witness(mut self, witness: Option<super::Witness>) -> Self {
        if let (NicholsStatus::Undetermined { .. }, Some(w)) = (&self.status, witness) {
            self.status = NicholsStatus::Infinite { witness: w.vector };
        }
        self
    }

    /// `Σ dims[k] t^k`, highest degree first.
    pub fn hilbert_polynomial(&self) -> Option<String> {
        self.total()?;
        let terms: Vec<String> = self
            .dims
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (k, 1) => format!("t^{k}"),
                (k, c) => format!("{c}t^{k}"),
            })
            .collect();
        Some(terms.join(" + "))
    }

    pub fn status_name(&self) -> &'static str {
        match self.status {
            NicholsStatus::Finite { .. } => "finite",
            NicholsStatus::Undetermined { .. } => "undetermined",
            NicholsStatus::Infinite { .. } => "infinite",
        }
    }

    /// JSON report. Monomials are lists of basis indices; a word's index is
    /// read row-major, first tensor factor most significant.
    pub fn to_json(&self) -> Value {
        let rel = self.relations.as_ref().map(|r| {
            r.iter()
                .map(|(k, vs)| {
                    let list: Vec<Value> = vs
                        .iter()
                        .map(|v| {
                            Value::Array(
                                v.iter()
                                    .map(|(w, x)| json!({"monomial": word_digits(*w, self.dim, *k), "coeff": x}))
                                    .collect(),
                            )
                        })
                        .collect();
                    (k.to_string(), Value::Array(list))
                })
                .collect::<serde_json::Map<_, _>>()
        });
        let witness = match &self.status {
            NicholsStatus::Infinite { witness } => json!(witness),
            _ => Value::Null,
        };
        json!({
            "dim": self.dim,
            "cutoff": self.cutoff,
            "dims": self.dims,
            "total": self.total(),
            "top_degree": self.top_degree(),
            "hilbert": self.hilbert_polynomial(),
            "relations": rel,
            "status": self.status_name(),
            "witness": witness,
            "note": self.note,
        })
    }
}

/// Basis indices of the tensor word with row-major index `w`.
pub fn word_digits(mut w: usize, d: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = w % d;
        w /= d;
    }
    out
}

/// Row-major index of a tensor word.
pub fn word_index(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}
