//! [F_{a,b}(1)]_{<p} mod p against the binomial coefficient from Gauss's sum.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::arith::{inv_mod, is_prime, mul_mod};
use crate::padic::RationalParam;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussReport {
    pub p: u64,
    pub a0: u64,
    pub b0: u64,
    /// sum_{n<p} (a)_n (b)_n / n!^2 mod p.
    pub truncated: u64,
    /// (a0 + b0)! / (a0! b0!) mod p, zero when a0 + b0 >= p.
    pub predicted: u64,
    pub agree: bool,
}

fn residue(r: RationalParam, p: u64) -> Result<u64> {
    if !r.is_p_integral(p) {
        return Err(Error::DenominatorDivisibleByP { den: r.den(), p });
    }
    let n = r.num().rem_euclid(p as i64) as u64;
    let d = inv_mod(r.den().rem_euclid(p as i64) as u64, p).ok_or(Error::NotAUnit)?;
    Ok(mul_mod(n, d, p))
}

/// Binomial coefficient C(n, k) mod p for n < p, or 0 when n >= p.
fn binomial_mod_p(n: u64, k: u64, p: u64) -> u64 {
    if n >= p {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = mul_mod(num, n - i, p);
        den = mul_mod(den, i + 1, p);
    }
    mul_mod(num, inv_mod(den, p).expect("k < p"), p)
}

pub fn gauss_mod_p(a: RationalParam, b: RationalParam, p: u64) -> Result<GaussReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (ar, br) = (residue(a, p)?, residue(b, p)?);
    let a0 = (p - ar) % p;
    let b0 = (p - br) % p;
    let mut term = 1u64;
    let mut sum = 1u64;
    for n in 1..p {
        let f = mul_mod((ar + n - 1) % p, (br + n - 1) % p, p);
        let inv = inv_mod(mul_mod(n, n, p), p).expect("n < p");
        term = mul_mod(mul_mod(term, f, p), inv, p);
        sum = (sum + term) % p;
    }
    let predicted = binomial_mod_p(a0 + b0, a0, p);
    Ok(GaussReport { p, a0, b0, truncated: sum, predicted, agree: sum == predicted })
}
