use super::BraidedSpace;
use crate::cyclotomic::CycMatrix;
use crate::error::{Error, Result};

/// Positive braid word on `n_strands` strands. Letter `i` (1-based) is the
/// generator acting on strands `i, i+1`; the word `[i1, i2, ...]` denotes the
/// product `τ_{i1} τ_{i2} ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub n_strands: usize,
    pub letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(n_strands: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l >= n_strands) {
            return Err(Error::DimensionMismatch(format!("letter {bad} out of range for {n_strands} strands")));
        }
        Ok(BraidWord { n_strands, letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Image in the symmetric group, in one-line notation on `0..n`: the
    /// product of adjacent transpositions `s_{i1} s_{i2} ⋯` as functions.
    pub fn permutation(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.n_strands).collect();
        // p = s_{i1} ∘ ... ∘ s_{ik}; right-multiplying by s_i swaps positions.
        for &l in &self.letters {
            p.swap(l - 1, l);
        }
        p
    }
}

/// Number of inversions of a permutation in one-line notation.
pub fn inversions(sigma: &[usize]) -> usize {
    let mut k = 0;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                k += 1;
            }
        }
    }
    k
}

fn check_perm(sigma: &[usize]) -> Result<()> {
    let mut seen = vec![false; sigma.len()];
    for &x in sigma {
        if x >= sigma.len() || std::mem::replace(&mut seen[x], true) {
            return Err(Error::DimensionMismatch(format!("{sigma:?} is not a permutation of 0..{}", sigma.len())));
        }
    }
    Ok(())
}

/// Reduced word for `σ` (one-line notation on `0..k`) from bubble sort,
/// lifted letter by letter to the braid group.
pub fn matsumoto_lift(sigma: &[usize]) -> Result<BraidWord> {
    check_perm(sigma)?;
    let mut p = sigma.to_vec();
    let mut swaps = Vec::new();
    // σ·s_{a1}⋯s_{aL} = id, so σ = s_{aL}⋯s_{a1}.
    for end in (1..p.len()).rev() {
        for a in 0..end {
            if p[a] > p[a + 1] {
                p.swap(a, a + 1);
                swaps.push(a + 1);
            }
        }
    }
    swaps.reverse();
    BraidWord::new(sigma.len().max(1), swaps)
}

/// A second reduced word for `σ`, peeling left descents (largest value
/// first) instead of bubbling positions.
pub fn left_descent_word(sigma: &[usize]) -> Result<BraidWord> {
    check_perm(sigma)?;
    let k = sigma.len();
    let mut p = sigma.to_vec();
    let mut letters = Vec::new();
    // s_i·p exchanges the values i and i+1; it shortens p iff i+1 precedes i.
    loop {
        let mut pos = vec![0; k];
        for (a, &v) in p.iter().enumerate() {
            pos[v] = a;
        }
        match (0..k.saturating_sub(1)).rev().find(|&i| pos[i + 1] < pos[i]) {
            Some(i) => {
                p.swap(pos[i], pos[i + 1]);
                letters.push(i + 1);
            }
            None => break,
        }
    }
    BraidWord::new(k.max(1), letters)
}

/// `c_i = id^{⊗(i-1)} ⊗ c ⊗ id^{⊗(k-i-1)}` on `V^{⊗k}`.
pub fn braid_generator_matrix(b: &BraidedSpace, k: usize, i: usize) -> Result<CycMatrix> {
    if i == 0 || i >= k {
        return Err(Error::DimensionMismatch(format!("generator {i} on {k} strands")));
    }
    let n = b.n();
    let d = b.dim();
    let left = CycMatrix::identity(n, d.pow(i as u32 - 1))?;
    let right = CycMatrix::identity(n, d.pow((k - i - 1) as u32))?;
    Ok(left.kron(b.braid()).kron(&right))
}

/// `ρ(w) = c_{i1} c_{i2} ⋯` on `V^{⊗k}`.
pub fn braid_word_matrix(b: &BraidedSpace, w: &BraidWord) -> Result<CycMatrix> {
    let k = w.n_strands;
    let mut acc = CycMatrix::identity(b.n(), b.dim().pow(k as u32))?;
    for &l in &w.letters {
        acc = acc.try_mul(&braid_generator_matrix(b, k, l)?)?;
    }
    Ok(acc)
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        out.push(p.clone());
        let Some(a) = (0..k.saturating_sub(1)).rev().find(|&a| p[a] < p[a + 1]) else { break };
        let b = (a + 1..k).rev().find(|&b| p[b] > p[a]).expect("successor exists");
        p.swap(a, b);
        p[a + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifts_are_reduced_and_correct() {
        for k in 1..=5 {
            for s in permutations(k) {
                for w in [matsumoto_lift(&s).unwrap(), left_descent_word(&s).unwrap()] {
                    assert_eq!(w.len(), inversions(&s), "{s:?}");
                    assert_eq!(w.permutation(), s, "{s:?} {w:?}");
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        assert!(matsumoto_lift(&[0, 1, 2]).unwrap().is_empty());
        assert_eq!(matsumoto_lift(&[1, 0]).unwrap().letters, vec![1]);
        assert_eq!(matsumoto_lift(&[2, 1, 0]).unwrap().len(), 3);
        assert_eq!(permutations(4).len(), 24);
        assert!(matsumoto_lift(&[0, 0]).is_err());
    }
}
