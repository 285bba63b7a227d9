//! Dense polynomials over F_p, coefficients low degree first.

use super::arith::{inv_mod, mul_mod};

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(b[db], p).expect("p prime");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mul_mod(r[dr], lead_inv, p);
        q[dr - db] = c;
        for i in 0..=db {
            let t = mul_mod(c, b[i], p);
            r[dr - db + i] = (r[dr - db + i] + p - t) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    divrem(a, b, p).1
}

pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

pub fn powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

pub fn make_monic(a: &[u64], p: u64) -> Vec<u64> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = inv_mod(a[d], p).expect("p prime");
            a[..=d].iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&x, p)
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let d = degree(&r0).expect("gcd of zero polynomials");
    let inv = inv_mod(r0[d], p).expect("p prime");
    let scale = |v: &[u64]| trim(v.iter().map(|&c| mul_mod(c, inv, p)).collect());
    (scale(&r0), scale(&s0), scale(&t0))
}

/// Irreducibility of a monic polynomial of degree f >= 1 over F_p:
/// gcd(x^(p^i) - x, m) = 1 for i <= f/2.
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let f = match degree(m) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if f == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut xp = x.clone();
    for _ in 1..=f / 2 {
        xp = powmod(&xp, p as u128, m, p);
        let g = gcd(&sub(&xp, &x, p), m, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// The first monic irreducible polynomial of degree f over F_p, enumerating
/// the lower coefficients by the index sum c_i p^i in increasing order.
pub fn least_irreducible(p: u64, f: u32) -> Vec<u64> {
    let f = f as usize;
    if f == 1 {
        return vec![0, 1];
    }
    let total = (p as u128).pow(f as u32);
    for idx in 0..total {
        let mut poly = Vec::with_capacity(f + 1);
        let mut r = idx;
        for _ in 0..f {
            poly.push((r % p as u128) as u64);
            r /= p as u128;
        }
        poly.push(1);
        if poly[0] != 0 && is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
