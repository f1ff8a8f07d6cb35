use super::poly::QPoly;
use super::Field;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// An element of Q(ξ_n).
///
/// Stored as `num / den` with `num` the integer coordinates in the power basis
/// (trailing zeros dropped), `den > 0` and `gcd(den, num...) = 1`.
#[derive(Clone)]
pub struct CycNum {
    field: &'static Field,
    num: Vec<BigInt>,
    den: BigInt,
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn to_small(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64().filter(|y| y.unsigned_abs() < (1 << 30))).collect()
}

impl CycNum {
    fn from_parts(field: &'static Field, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        trim(&mut num);
        if num.is_empty() {
            return CycNum { field, num, den: BigInt::one() };
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                den /= &g;
                for c in num.iter_mut() {
                    *c /= &g;
                }
            }
        }
        CycNum { field, num, den }
    }

    pub(super) fn xi_pow_in(field: &'static Field, k: usize) -> Self {
        let mut num = vec![BigInt::zero(); field.deg];
        for (j, c) in field.reduction(k) {
            num[*j] = c.clone();
        }
        Self::from_parts(field, num, BigInt::one())
    }

    pub fn zero_in(field: &'static Field) -> Self {
        CycNum { field, num: Vec::new(), den: BigInt::one() }
    }

    pub fn zero(n: u32) -> Result<Self> {
        Ok(Self::zero_in(Field::get(n)?))
    }

    pub fn one(n: u32) -> Result<Self> {
        Self::from_int(n, 1)
    }

    pub fn from_int(n: u32, v: i64) -> Result<Self> {
        Ok(Self::from_parts(Field::get(n)?, vec![BigInt::from(v)], BigInt::one()))
    }

    pub fn from_rational(n: u32, r: &Rational) -> Result<Self> {
        Ok(Self::from_parts(Field::get(n)?, vec![r.numer().clone()], r.denom().clone()))
    }

    /// Evaluates the polynomial `Σ c_k x^k` at ξ; any length is accepted.
    pub fn from_coeffs(n: u32, coeffs: &[Rational]) -> Result<Self> {
        let field = Field::get(n)?;
        let mut acc = Self::zero_in(field);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::from_parts(field, vec![c.numer().clone()], c.denom().clone());
            acc += &(&term * &field.powers()[k % field.n as usize]);
        }
        Ok(acc)
    }

    /// The generator ξ.
    pub fn xi(n: u32) -> Result<Self> {
        super::cyc(n, 1)
    }

    pub fn n(&self) -> u32 {
        self.field.n
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }

    /// Power-basis coordinates, length deg Φ_n.
    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.field.deg)
            .map(|k| match self.num.get(k) {
                Some(c) => BigRational::new(c.clone(), self.den.clone()),
                None => BigRational::zero(),
            })
            .collect()
    }

    /// Rational value if the element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    fn check(&self, o: &CycNum) -> Result<()> {
        if self.field.n != o.field.n {
            return Err(Error::ConductorMismatch(self.field.n, o.field.n));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &CycNum) -> Result<CycNum> {
        self.check(o)?;
        Ok(self.add_unchecked(o, false))
    }

    pub fn try_sub(&self, o: &CycNum) -> Result<CycNum> {
        self.check(o)?;
        Ok(self.add_unchecked(o, true))
    }

    fn add_unchecked(&self, o: &CycNum, negate: bool) -> CycNum {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -o } else { o.clone() };
        }
        let len = self.num.len().max(o.num.len());
        let mut num = Vec::with_capacity(len);
        if self.den == o.den {
            for k in 0..len {
                let a = self.num.get(k);
                let b = o.num.get(k);
                num.push(match (a, b, negate) {
                    (Some(a), Some(b), false) => a + b,
                    (Some(a), Some(b), true) => a - b,
                    (Some(a), None, _) => a.clone(),
                    (None, Some(b), false) => b.clone(),
                    (None, Some(b), true) => -b,
                    (None, None, _) => BigInt::zero(),
                });
            }
            return Self::from_parts(self.field, num, self.den.clone());
        }
        for k in 0..len {
            let a = self.num.get(k).map(|a| a * &o.den).unwrap_or_default();
            let b = o.num.get(k).map(|b| b * &self.den).unwrap_or_default();
            num.push(if negate { a - b } else { a + b });
        }
        Self::from_parts(self.field, num, &self.den * &o.den)
    }

    pub fn try_mul(&self, o: &CycNum) -> Result<CycNum> {
        self.check(o)?;
        Ok(self.mul_unchecked(o))
    }

    fn mul_unchecked(&self, o: &CycNum) -> CycNum {
        if self.is_zero() || o.is_zero() {
            return Self::zero_in(self.field);
        }
        let f = self.field;
        let len = self.num.len() + o.num.len() - 1;
        let num = match (to_small(&self.num), to_small(&o.num)) {
            (Some(a), Some(b)) => {
                let mut c = vec![0i128; len.max(f.deg)];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        c[i + j] += x as i128 * y as i128;
                    }
                }
                let mut out: Vec<i128> = c[..f.deg].to_vec();
                let mut overflow = false;
                for k in f.deg..len {
                    if c[k] == 0 {
                        continue;
                    }
                    for (j, t) in f.reduction(k) {
                        match t.to_i64() {
                            Some(t) if t.unsigned_abs() < (1 << 30) => out[*j] += c[k] * t as i128,
                            _ => overflow = true,
                        }
                    }
                }
                if overflow {
                    self.mul_big(o)
                } else {
                    out.into_iter().map(BigInt::from).collect()
                }
            }
            _ => self.mul_big(o),
        };
        let den = if self.den.is_one() && o.den.is_one() { BigInt::one() } else { &self.den * &o.den };
        Self::from_parts(f, num, den)
    }

    fn mul_big(&self, o: &CycNum) -> Vec<BigInt> {
        let f = self.field;
        let len = self.num.len() + o.num.len() - 1;
        let mut c = vec![BigInt::zero(); len.max(f.deg)];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.num.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        for k in f.deg..len {
            if c[k].is_zero() {
                continue;
            }
            let ck = std::mem::take(&mut c[k]);
            for (j, t) in f.reduction(k) {
                c[*j] += &ck * t;
            }
        }
        c.truncate(f.deg);
        c
    }

    /// Multiplicative inverse via the extended Euclidean algorithm with Φ_n.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            let r = r.recip();
            return Ok(Self::from_parts(self.field, vec![r.numer().clone()], r.denom().clone()));
        }
        let a = QPoly::new(self.num.iter().map(|c| BigRational::from_integer(c.clone())).collect());
        let (g, s) = a.ext_gcd_mod(&self.field.phi.to_rational());
        // Φ_n is irreducible, so the gcd is a nonzero constant.
        let g0 = g.coeffs[0].clone();
        debug_assert_eq!(g.degree(), Some(0));
        let scale = BigRational::from_integer(self.den.clone()) / g0;
        let coeffs: Vec<BigRational> = s.coeffs.iter().map(|c| c * &scale).collect();
        Ok(Self::from_rationals(self.field, &coeffs))
    }

    fn from_rationals(field: &'static Field, coeffs: &[BigRational]) -> CycNum {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_parts(field, num, den)
    }

    pub fn try_div(&self, o: &CycNum) -> Result<CycNum> {
        self.check(o)?;
        Ok(self.mul_unchecked(&o.inv()?))
    }

    /// `self^e`; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<CycNum> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::from_parts(self.field, vec![BigInt::one()], BigInt::one());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_unchecked(&b);
            }
        }
        Ok(acc)
    }

    pub fn scale_int(&self, k: i64) -> CycNum {
        let k = BigInt::from(k);
        Self::from_parts(self.field, self.num.iter().map(|c| c * &k).collect(), self.den.clone())
    }

    /// Smallest `k >= 1` with `self^k = 1`, or `None` if `self` is not a root of unity.
    ///
    /// For odd n the roots of unity in Q(ξ_n) are ±ξ^j, so searching up to 2n
    /// is exhaustive.
    pub fn root_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        for k in 1..=2 * self.field.n {
            if p.is_one() {
                return Some(k);
            }
            p = p.mul_unchecked(self);
        }
        None
    }

    /// Writes `self` as `sign · ξ^k` when it is a root of unity.
    pub fn as_root_of_unity(&self) -> Option<(i8, u32)> {
        let pw = self.field.powers();
        let neg = -self;
        for (k, p) in pw.iter().enumerate() {
            if p == self {
                return Some((1, k as u32));
            }
            if *p == neg {
                return Some((-1, k as u32));
            }
        }
        None
    }

    /// Galois automorphism ξ ↦ ξ^a, `gcd(a, n) = 1`.
    pub fn galois(&self, a: u32) -> CycNum {
        let n = self.field.n;
        assert_eq!(num_integer::gcd(a, n), 1, "galois exponent must be a unit mod n");
        let pw = self.field.powers();
        let mut acc = Self::zero_in(self.field);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = &pw[(k as u64 * a as u64 % n as u64) as usize];
            acc = acc.add_unchecked(&term.scale_big(c), false);
        }
        Self::from_parts(self.field, acc.num, &acc.den * &self.den)
    }

    fn scale_big(&self, k: &BigInt) -> CycNum {
        Self::from_parts(self.field, self.num.iter().map(|c| c * k).collect(), self.den.clone())
    }

    /// Field norm down to Q: the product of all Galois conjugates.
    pub fn norm(&self) -> Rational {
        let n = self.field.n;
        let mut acc = Self::from_parts(self.field, vec![BigInt::one()], BigInt::one());
        for a in (1..n).filter(|&a| num_integer::gcd(a, n) == 1) {
            acc = acc.mul_unchecked(&self.galois(a));
        }
        acc.to_rational().expect("norm lies in Q")
    }
}

impl PartialEq for CycNum {
    fn eq(&self, o: &Self) -> bool {
        self.field.n == o.field.n && self.den == o.den && self.num == o.num
    }
}
impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.field.n.hash(h);
        self.num.hash(h);
        self.den.hash(h);
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            /// Panics on conductor mismatch or division by zero.
            fn $m(self, o: &CycNum) -> CycNum {
                self.$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, o: CycNum) -> CycNum {
                (&self).$m(&o)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, o: &CycNum) -> CycNum {
                (&self).$m(o)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, o: &CycNum) {
        *self = &*self + o;
    }
}
impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, o: &CycNum) {
        *self = &*self - o;
    }
}
impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, o: &CycNum) {
        *self = &*self * o;
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { field: self.field, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}
impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some((s, k)) = self.as_root_of_unity() {
            let sign = if s < 0 { "-" } else { "" };
            return match k {
                0 => write!(f, "{sign}1"),
                1 => write!(f, "{sign}ξ"),
                _ => write!(f, "{sign}ξ^{k}"),
            };
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "ξ")?,
                (_, false) => write!(f, "{mag}ξ")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[n={}]({})", self.field.n, self)
    }
}

/// JSON integer that falls back to a decimal string outside the i64 range.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(b: &BigInt) -> Self {
        match b.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(b.to_string()),
        }
    }
}

impl JsonInt {
    fn to_big(&self) -> std::result::Result<BigInt, String> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|_| format!("bad integer `{s}`")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CycJson {
    n: u32,
    coeffs: Vec<(JsonInt, JsonInt)>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self.coeffs().iter().map(|c| (c.numer().into(), c.denom().into())).collect();
        CycJson { n: self.field.n, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CycJson::deserialize(d)?;
        let field = Field::get(j.n).map_err(D::Error::custom)?;
        if j.coeffs.len() != field.deg {
            return Err(D::Error::custom(format!("expected {} coefficients", field.deg)));
        }
        let mut coeffs = Vec::with_capacity(j.coeffs.len());
        for (a, b) in &j.coeffs {
            let (a, b) = (a.to_big().map_err(D::Error::custom)?, b.to_big().map_err(D::Error::custom)?);
            if b.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(a, b));
        }
        Ok(CycNum::from_rationals(field, &coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::cyc;
    use proptest::prelude::*;

    fn x(n: u32, k: i64) -> CycNum {
        cyc(n, k).unwrap()
    }

    #[test]
    fn basic_identities() {
        assert!(x(3, 0).is_one());
        assert!((x(3, 1) * x(3, 2)).is_one());
        assert!((x(3, 0) + x(3, 1) + x(3, 2)).is_zero());
        assert_eq!(x(3, 1).inv().unwrap(), x(3, 2));
        let one = CycNum::one(3).unwrap();
        assert!(((&one + &x(3, 1)) * (&one + &x(3, 2))).is_one());
        for n in [3u32, 5, 7, 9, 15] {
            assert!(x(n, 1).pow(n as i64).unwrap().is_one());
            assert_eq!(x(n, 7), x(n, 7 + n as i64));
        }
    }

    #[test]
    fn conductor_mismatch_and_zero_division() {
        assert_eq!(x(3, 1).try_add(&x(5, 1)).unwrap_err(), Error::ConductorMismatch(3, 5));
        assert_eq!(CycNum::zero(3).unwrap().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn root_orders() {
        assert_eq!(CycNum::one(3).unwrap().root_order(), Some(1));
        assert_eq!(x(3, 1).root_order(), Some(3));
        assert_eq!(x(9, 2).root_order(), Some(9));
        assert_eq!(x(9, 3).root_order(), Some(3));
        assert_eq!((-x(5, 0)).root_order(), Some(2));
        assert_eq!(CycNum::from_int(3, 2).unwrap().root_order(), None);
        for n in [3u32, 5, 7, 9, 15] {
            for k in 0..n as i64 {
                let expect = crate::zn::additive_order(k, n);
                assert_eq!(x(n, k).root_order(), Some(expect));
                assert_eq!(x(n, k).as_root_of_unity(), Some((1, k as u32)));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let a = x(5, 3) * CycNum::from_rational(5, &BigRational::new(3.into(), 7.into())).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with("{\"n\":5,\"coeffs\":[["));
        let b: CycNum = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        let one: CycNum = serde_json::from_str(r#"{"n":3,"coeffs":[[2,2],[0,1]]}"#).unwrap();
        assert!(one.is_one());
    }

    fn arb(n: u32) -> impl Strategy<Value = CycNum> {
        let deg = Field::get(n).unwrap().degree();
        proptest::collection::vec((-20i64..20, 1i64..6), deg).prop_map(move |v| {
            let c: Vec<Rational> = v.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect();
            CycNum::from_coeffs(n, &c).unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb(9), b in arb(9), c in arb(9)) {
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a - &b).is_zero(), a == b);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
                // norm is multiplicative and nonzero off zero
                prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
            }
        }

        #[test]
        fn inverse_small_conductor(a in arb(5)) {
            if !a.is_zero() {
                let i = a.inv().unwrap();
                prop_assert!((&a * &i).is_one());
                prop_assert_eq!(i.inv().unwrap(), a);
            }
        }
    }
}
