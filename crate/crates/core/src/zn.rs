//! Index arithmetic in Z_n for odd n.

/// Reduces an integer into `0..n`.
#[inline]
pub fn md(x: i64, n: u32) -> u32 {
    x.rem_euclid(n as i64) as u32
}

/// The inverse of 2 in Z_n (n odd).
#[inline]
pub fn inv2(n: u32) -> u32 {
    n.div_ceil(2)
}

/// The inverse of 4 in Z_n (n odd).
#[inline]
pub fn inv4(n: u32) -> u32 {
    let h = inv2(n) as u64;
    ((h * h) % n as u64) as u32
}

/// `x / 2` in Z_n.
#[inline]
pub fn half(x: i64, n: u32) -> u32 {
    md(x * inv2(n) as i64, n)
}

/// `x / 4` in Z_n.
#[inline]
pub fn quarter(x: i64, n: u32) -> u32 {
    md(x * inv4(n) as i64, n)
}

/// Order of `k` in the additive group Z_n, i.e. n / gcd(n, k).
pub fn additive_order(k: i64, n: u32) -> u32 {
    n / num_integer::gcd(md(k, n), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halves_and_quarters() {
        for n in [3u32, 5, 7, 9, 11] {
            for x in 0..n as i64 {
                assert_eq!(md(2 * half(x, n) as i64, n), x as u32);
                assert_eq!(md(4 * quarter(x, n) as i64, n), x as u32);
            }
        }
        assert_eq!(md(-1, 3), 2);
    }

    #[test]
    fn orders() {
        assert_eq!(additive_order(0, 9), 1);
        assert_eq!(additive_order(3, 9), 3);
        assert_eq!(additive_order(2, 9), 9);
    }
}
