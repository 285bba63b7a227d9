//! F_q, q = p^e, with log/exp tables for brute-force counting.

use crate::error::{Error, Result};
use crate::padic::arith::{is_prime, prime_factors};
use crate::padic::fp_poly;

/// Largest field size for which tables are built.
pub const MAX_FIELD_SIZE: u64 = 1 << 24;

/// Elements are indices sum c_i p^i over the power basis of
/// F_p[x]/(modulus). Zero is index 0; one is index 1.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    e: u32,
    q: u64,
    modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn to_poly(mut idx: u64, p: u64, e: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(idx % p);
        idx /= p;
    }
    out
}

fn from_poly(poly: &[u64], p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl FiniteField {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive".into()));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::InvalidParameter(format!("F_{p}^{e} is too large to enumerate")))?;
        let modulus = fp_poly::least_irreducible(p, e);
        let order = q - 1;
        let factors = prime_factors(order);
        // The first index whose class generates the multiplicative group.
        let gen = (1..q)
            .map(|i| to_poly(i, p, e))
            .find(|g| {
                factors.iter().all(|&r| {
                    let x = fp_poly::powmod(g, (order / r) as u128, &modulus, p);
                    x != vec![1]
                })
            })
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = vec![1u64];
        for (k, slot) in exp.iter_mut().enumerate() {
            let idx = from_poly(&cur, p);
            *slot = idx as u32;
            log[idx as usize] = k as u32;
            cur = fp_poly::mulmod(&cur, &gen, &modulus, p);
        }
        Ok(FiniteField { p, e, q, modulus, exp, log })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.e
    }
    pub fn size(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Image of an integer under F_p -> F_q.
    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Discrete log to the fixed generator; `None` for zero.
    pub fn log(&self, x: u64) -> Option<u64> {
        match self.log[x as usize] {
            u32::MAX => None,
            k => Some(k as u64),
        }
    }

    pub fn exp(&self, k: u64) -> u64 {
        self.exp[(k % (self.q - 1)) as usize] as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0u64, 1u64);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.e == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0u64, 1u64);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match (self.log(a), self.log(b)) {
            (Some(x), Some(y)) => self.exp(x + y),
            _ => 0,
        }
    }

    pub fn pow(&self, a: u64, n: u64) -> u64 {
        match self.log(a) {
            Some(x) => self.exp((x as u128 * n as u128 % (self.q - 1) as u128) as u64),
            None if n == 0 => 1,
            None => 0,
        }
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        self.log(a).map(|x| self.exp(self.q - 1 - x))
    }

    /// Number of solutions y of y^n = w.
    pub fn count_nth_roots(&self, w: u64, n: u64) -> u64 {
        let g = num_integer::gcd(n, self.q - 1);
        match self.log(w) {
            None => 1,
            Some(k) if k % g == 0 => g,
            Some(_) => 0,
        }
    }

    /// Quadratic character, chi(0) = 0.
    pub fn chi(&self, w: u64) -> i64 {
        match self.log(w) {
            None => 0,
            Some(k) if k % 2 == 0 => 1,
            Some(_) => -1,
        }
    }
}
