//! Exact arithmetic in the cyclotomic field Q(ξ_n), n odd, and exact linear
//! algebra over it.
//!
//! Elements are stored in the power basis `1, ξ, ..., ξ^{φ(n)-1}` modulo the
//! cyclotomic polynomial Φ_n, so equal field elements have equal
//! representations.

mod matrix;
mod num;
pub mod poly;

pub use matrix::{CycMatrix, Rref, SolutionSpace, SparseVec};

/// Sparse-row elimination primitives shared with the other modules.
pub mod matrix_internals {
    pub use super::matrix::{axpy_sub, canonical_sparse, densify, rref_rows};
}
pub use num::{CycNum, Rational};
pub use poly::IntPoly;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

/// Φ_n, obtained by dividing `x^n - 1` by Φ_d for every proper divisor d of n.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic_polynomial needs n >= 1");
    let mut p = IntPoly::x_pow_minus_one(n as usize);
    for d in 1..n {
        if n % d == 0 {
            p = p.div_exact_monic(&cyclotomic_polynomial(d));
        }
    }
    p
}

/// Per-conductor tables shared by every element of Q(ξ_n).
#[derive(Debug)]
pub struct Field {
    n: u32,
    deg: usize,
    phi: IntPoly,
    /// `reduce[k]` holds the nonzero coordinates of `x^k mod Φ_n`.
    reduce: Vec<Vec<(usize, BigInt)>>,
    powers: OnceLock<Vec<CycNum>>,
}

static FIELDS: OnceLock<RwLock<HashMap<u32, &'static Field>>> = OnceLock::new();

impl Field {
    /// Shared field data for conductor `n`; rejects even and unit conductors.
    pub fn get(n: u32) -> Result<&'static Field> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::InvalidConductor(n as i64));
        }
        let map = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(f) = map.read().unwrap().get(&n) {
            return Ok(f);
        }
        let mut w = map.write().unwrap();
        Ok(*w.entry(n).or_insert_with(|| Box::leak(Box::new(Field::build(n)))))
    }

    fn build(n: u32) -> Field {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.degree().unwrap();
        let top = (n as usize).max(2 * deg);
        let mut reduce = Vec::with_capacity(top);
        let mut cur = vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for _ in 0..top {
            reduce.push(cur.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect());
            // multiply by x and fold x^deg = -(Φ_n - x^deg)
            let carry = cur.pop().unwrap();
            cur.insert(0, BigInt::zero());
            if !carry.is_zero() {
                for (k, c) in phi.coeffs.iter().take(deg).enumerate() {
                    cur[k] -= &carry * c;
                }
            }
        }
        Field { n, deg, phi, reduce, powers: OnceLock::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Degree of Φ_n, i.e. the dimension of Q(ξ_n) over Q.
    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub(crate) fn reduction(&self, k: usize) -> &[(usize, BigInt)] {
        &self.reduce[k]
    }

    /// `ξ^k` for `k` in `0..n`, cached.
    pub fn powers(&'static self) -> &'static [CycNum] {
        self.powers.get_or_init(|| (0..self.n).map(|k| CycNum::xi_pow_in(self, k as usize)).collect())
    }
}

/// `ξ^k` in Q(ξ_n); `k` is reduced mod n.
pub fn cyc(n: u32, k: i64) -> Result<CycNum> {
    let f = Field::get(n)?;
    Ok(f.powers()[k.rem_euclid(n as i64) as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(9), IntPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(15).to_string(), "x^8 - x^7 + x^5 - x^4 + x^3 - x + 1");
        assert_eq!(cyclotomic_polynomial(9).to_string(), "x^6 + x^3 + 1");
    }

    #[test]
    fn product_of_cyclotomics_is_x_pow_minus_one() {
        for n in 1..=30u32 {
            let mut prod = IntPoly::from_i64(&[1]);
            for d in (1..=n).filter(|d| n % d == 0) {
                let phi = cyclotomic_polynomial(d);
                let mut c = vec![BigInt::zero(); prod.coeffs.len() + phi.coeffs.len() - 1];
                for (i, a) in prod.coeffs.iter().enumerate() {
                    for (j, b) in phi.coeffs.iter().enumerate() {
                        c[i + j] += a * b;
                    }
                }
                prod = IntPoly::new(c);
            }
            assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_conductors() {
        assert_eq!(Field::get(4).unwrap_err(), Error::InvalidConductor(4));
        assert!(Field::get(1).is_err());
        assert!(cyc(2, 1).is_err());
        assert!(cyc(3, 1).is_ok());
    }
}
