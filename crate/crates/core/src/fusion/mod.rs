//! Tensor products of Yetter-Drinfeld modules, their decomposition into
//! simples through Hom dimensions, and the closed-form fusion rules.

mod closed;
mod tensor;

pub use closed::{closed_form_fuse, closed_form_fuse_with, u_w0_isomorphism, zn_orbits, FusionReading, ZnRelation};
pub use tensor::tensor_module;

use crate::error::{Error, Result};
use crate::hopf::KnAlgebra;
use crate::yd::{build_simple, hom_dimension, list_simples, SimpleLabel, YDModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// A multiset of simple labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FusionDecomposition {
    parts: BTreeMap<SimpleLabel, usize>,
}

impl FusionDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, l: SimpleLabel, mult: usize) {
        if mult > 0 {
            *self.parts.entry(l).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, l: &SimpleLabel) -> usize {
        self.parts.get(l).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SimpleLabel, &usize)> {
        self.parts.iter()
    }

    /// Number of simple summands counted with multiplicity.
    pub fn len(&self) -> usize {
        self.parts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total_dim(&self, n: u32) -> usize {
        self.parts.iter().map(|(l, k)| l.dim(n) * k).sum()
    }
}

impl fmt::Display for FusionDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> =
            self.parts.iter().map(|(l, k)| if *k == 1 { l.to_string() } else { format!("{k}*{l}") }).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Serialize for FusionDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.parts.len()))?;
        for (l, k) in &self.parts {
            seq.serialize_element(&serde_json::json!({"label": l.to_string(), "multiplicity": k}))?;
        }
        seq.end()
    }
}

/// All simple modules of one algebra, built once.
/// A simple, its module, and its sorted weight multiset.
type CatalogEntry = (SimpleLabel, YDModule, Vec<(u32, u32)>);

pub struct Catalog {
    alg: KnAlgebra,
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn new(alg: KnAlgebra) -> Self {
        let entries = list_simples(&alg)
            .into_par_iter()
            .map(|l| {
                let m = build_simple(alg, l).expect("listed labels are simple");
                let mut w = m.weights().expect("simples are weight graded");
                w.sort_unstable();
                (l, m, w)
            })
            .collect();
        Catalog { alg, entries }
    }

    /// Shared catalog for `n`, built on first use.
    pub fn shared(alg: KnAlgebra) -> Arc<Catalog> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Catalog>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(c) = cache.lock().expect("catalog cache").get(&alg.n()) {
            return c.clone();
        }
        let c = Arc::new(Catalog::new(alg));
        cache.lock().expect("catalog cache").entry(alg.n()).or_insert(c).clone()
    }

    pub fn algebra(&self) -> KnAlgebra {
        self.alg
    }

    pub fn module(&self, l: &SimpleLabel) -> Option<&YDModule> {
        self.entries.iter().find(|e| e.0 == *l).map(|e| &e.1)
    }

    pub fn labels(&self) -> impl Iterator<Item = &SimpleLabel> {
        self.entries.iter().map(|e| &e.0)
    }
}

fn sub_multiset(small: &[(u32, u32)], big: &[(u32, u32)]) -> bool {
    let mut it = big.iter();
    'outer: for s in small {
        for b in it.by_ref() {
            if b == s {
                continue 'outer;
            }
            if b > s {
                return false;
            }
        }
        return false;
    }
    true
}

/// Multiplicity of each simple `S` in `M` as `dim Hom(S, M)`.
pub fn decompose_with(cat: &Catalog, m: &YDModule) -> Result<FusionDecomposition> {
    if cat.alg != m.algebra() {
        return Err(Error::ConductorMismatch(cat.alg.n(), m.n()));
    }
    let weights = m.weights().map(|mut w| {
        w.sort_unstable();
        w
    });
    let mults: Vec<(SimpleLabel, usize)> = cat
        .entries
        .par_iter()
        .filter(|(_, s, ws)| s.dim() <= m.dim() && weights.as_ref().map_or(true, |wm| sub_multiset(ws, wm)))
        .map(|(l, s, _)| (*l, hom_dimension(s, m)))
        .filter(|(_, k)| *k > 0)
        .collect();
    let mut out = FusionDecomposition::new();
    for (l, k) in mults {
        out.add(l, k);
    }
    let found = out.total_dim(m.n());
    if found != m.dim() {
        return Err(Error::Unbalanced { found, expected: m.dim() });
    }
    Ok(out)
}

/// `decompose_with` against the shared catalog.
pub fn decompose(m: &YDModule) -> Result<FusionDecomposition> {
    decompose_with(&Catalog::shared(m.algebra()), m)
}

/// Which pairs a fusion table covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Every unordered pair of simples, including squares.
    All,
    /// `count` ordered pairs drawn uniformly with a seeded ChaCha8 stream.
    Sample { seed: u64, count: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct FusionRow {
    pub left: SimpleLabel,
    pub right: SimpleLabel,
    pub dim: usize,
    pub oracle: FusionDecomposition,
    pub closed_form: FusionDecomposition,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FusionTable {
    pub n: u32,
    pub rows: Vec<FusionRow>,
    pub mismatches: usize,
}

pub fn scope_pairs(alg: &KnAlgebra, scope: Scope) -> Vec<(SimpleLabel, SimpleLabel)> {
    let labels = list_simples(alg);
    match scope {
        Scope::All => {
            let mut out = Vec::new();
            for (a, l1) in labels.iter().enumerate() {
                for l2 in &labels[a..] {
                    out.push((*l1, *l2));
                }
            }
            out
        }
        Scope::Sample { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let a = rng.random_range(0..labels.len());
                    let b = rng.random_range(0..labels.len());
                    (labels[a], labels[b])
                })
                .collect()
        }
    }
}

/// Compares `decompose(S1 ⊗ S2)` with the closed-form rule on every pair in scope.
pub fn fusion_table(alg: KnAlgebra, scope: Scope, reading: FusionReading) -> Result<FusionTable> {
    let cat = Catalog::shared(alg);
    let n = alg.n();
    let rows = scope_pairs(&alg, scope)
        .into_par_iter()
        .map(|(l1, l2)| {
            let m1 = cat.module(&l1).expect("catalog");
            let m2 = cat.module(&l2).expect("catalog");
            let t = tensor_module(m1, m2)?;
            let oracle = decompose_with(&cat, &t)?;
            let closed_form = closed_form_fuse_with(n, l1, l2, reading);
            let agree = oracle == closed_form;
            Ok(FusionRow { left: l1, right: l2, dim: t.dim(), oracle, closed_form, agree })
        })
        .collect::<Result<Vec<_>>>()?;
    let mismatches = rows.iter().filter(|r| !r.agree).count();
    Ok(FusionTable { n, rows, mismatches })
}
