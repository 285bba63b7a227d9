//! Word-sized modular helpers shared by the scalar types.

use crate::error::{Error, Result};

/// Largest modulus p^prec accepted by the fixed-width scalar types.
pub const MAX_MODULUS: u64 = 1 << 62;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// p^k as u64, or an error when it exceeds [`MAX_MODULUS`].
pub fn checked_modulus(p: u64, k: u32) -> Result<u64> {
    let mut m: u64 = 1;
    for _ in 0..k {
        m = m
            .checked_mul(p)
            .filter(|&v| v <= MAX_MODULUS)
            .ok_or(Error::PrecisionTooLarge { p, prec: k })?;
    }
    Ok(m)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Reduce a signed integer into [0, m).
#[inline]
pub fn reduce_i128(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

/// p-adic valuation of a nonzero integer.
pub fn valuation_i128(mut v: i128, p: u64) -> u32 {
    assert!(v != 0, "valuation of zero");
    let p = p as i128;
    let mut k = 0;
    while v % p == 0 {
        v /= p;
        k += 1;
    }
    k
}

/// Smallest e with p^e >= n (0 for n <= 1).
pub fn ceil_log(p: u64, n: u64) -> u32 {
    let mut e = 0;
    let mut acc: u128 = 1;
    while acc < n as u128 {
        acc *= p as u128;
        e += 1;
    }
    e
}

/// Multiplicative order of p modulo n (n >= 2, gcd(p, n) = 1).
pub fn multiplicative_order(p: u64, n: u64) -> u32 {
    if n == 1 {
        return 1;
    }
    let mut x = p % n;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, p, n);
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Distinct prime factors of n.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
