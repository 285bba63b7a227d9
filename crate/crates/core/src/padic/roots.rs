use std::sync::Arc;

use super::arith::{gcd, is_prime, multiplicative_order, prime_factors};
use super::log::teichmuller;
use super::zp::Zp;
use super::zq::{UnramifiedRing, Zq};
use crate::error::{Error, Result};

/// The N-th roots of unity, as Teichmüller lifts in the smallest unramified
/// level that contains them (degree = order of p mod N).
#[derive(Clone, Debug)]
pub struct RootsOfUnity {
    pub n: u64,
    pub ring: Arc<UnramifiedRing>,
    /// `roots[k] = zeta^k` for a fixed primitive root `zeta`.
    pub roots: Vec<Zq>,
}

impl RootsOfUnity {
    /// The roots as Z_p values when N | p - 1.
    pub fn in_zp(&self) -> Option<Vec<Zp>> {
        if self.ring.degree() != 1 {
            return None;
        }
        self.roots.iter().map(|r| r.to_zp().ok()).collect()
    }

    pub fn primitive(&self) -> &Zq {
        &self.roots[1 % self.roots.len()]
    }
}

pub fn roots_of_unity(n: u64, p: u64, prec: u32) -> Result<RootsOfUnity> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    if gcd(n, p) != 1 {
        return Err(Error::PDividesN { p, n });
    }
    let f = multiplicative_order(p, n);
    let ring = UnramifiedRing::new(p, f, prec)?;
    roots_of_unity_in(n, &ring)
}

/// N-th roots of unity inside a given level, which must contain them.
pub fn roots_of_unity_in(n: u64, ring: &Arc<UnramifiedRing>) -> Result<RootsOfUnity> {
    let p = ring.p();
    if gcd(n, p) != 1 {
        return Err(Error::PDividesN { p, n });
    }
    let q = ring.q();
    if (q - 1) % n as u128 != 0 {
        return Err(Error::InvalidParameter(format!("mu_{n} is not contained in F_{q}")));
    }
    let exp = ((q - 1) / n as u128) as u64;
    let primes = prime_factors(n);
    let one = ring.one();
    let mut zeta = None;
    for idx in 1..q {
        let cand = ring.from_index(idx);
        let z = teichmuller(&cand)?.pow(exp);
        if primes.iter().all(|&l| z.pow(n / l) != one) {
            zeta = Some(z);
            break;
        }
    }
    let zeta = zeta.expect("F_q^x is cyclic");
    let mut roots = Vec::with_capacity(n as usize);
    let mut acc = one;
    for _ in 0..n {
        roots.push(acc.clone());
        acc = &acc * &zeta;
    }
    Ok(RootsOfUnity { n, ring: Arc::clone(ring), roots })
}
