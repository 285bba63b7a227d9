//! Kubota–Leopoldt values L_p(r, omega^(1-r)).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use super::bernoulli::bernoulli;
use super::polylog::{polylog_at_roots, polylog_level};
use crate::error::{Error, Result};
use crate::padic::arith::{checked_modulus, gcd, mul_mod, pow_mod};
use crate::padic::{roots_of_unity, Qp, Zp};

/// Largest auxiliary N tried when choosing the normalization.
pub const MAX_AUX_N: u64 = 64;

/// 1 - N^(1-r) as an exact rational.
pub fn normalization_factor(r: i64, n: u64) -> BigRational {
    let nb = BigRational::from_integer(BigInt::from(n));
    let e = 1 - r;
    let pw = if e >= 0 { nb.pow(e as u64) } else { nb.pow(e.unsigned_abs()).recip() };
    BigRational::one() - pw
}

fn valuation_of(x: &BigRational, p: u64) -> Option<u32> {
    if x == &BigRational::from_integer(0.into()) {
        return None;
    }
    let pb = BigInt::from(p);
    let mut num = x.numer().clone();
    let mut v = 0;
    while (&num % &pb) == BigInt::from(0) {
        num /= &pb;
        v += 1;
    }
    Some(v)
}

/// Auxiliary N <= [`MAX_AUX_N`] prime to p, ordered by the valuation of
/// 1 - N^(1-r) and then by N. A unit factor exists unless
/// r = 1 mod (p-1) (trivial character), where every factor is divisible by p.
pub fn auxiliary_ns(r: i64, p: u64) -> Result<Vec<(u64, u32)>> {
    if r == 1 {
        return Err(Error::RIsOne);
    }
    let mut out: Vec<(u64, u32)> = (2..=MAX_AUX_N)
        .filter(|&n| gcd(n, p) == 1)
        .filter_map(|n| valuation_of(&normalization_factor(r, n), p).map(|v| (n, v)))
        .collect();
    if out.is_empty() {
        return Err(Error::NoValidN { bound: MAX_AUX_N });
    }
    out.sort_by_key(|&(n, v)| (v, n));
    Ok(out)
}

/// -(1 - N^(1-r))^-1 sum_{eps in mu_N, eps != 1} ln_r(eps), to absolute
/// precision `prec`.
pub fn kubota_leopoldt_with_n(r: i64, n: u64, p: u64, prec: u32) -> Result<Qp> {
    if r == 1 {
        return Err(Error::RIsOne);
    }
    if gcd(n, p) != 1 {
        return Err(Error::PDividesN { p, n });
    }
    let f = normalization_factor(r, n);
    let v = valuation_of(&f, p).ok_or(Error::NoValidN { bound: n })?;
    let work = prec + v;
    let roots = roots_of_unity(n, p, work)?;
    let vals = polylog_at_roots(r, &roots, polylog_level(p, work))?;
    let mut acc = roots.ring.zero();
    for x in &vals {
        acc = &acc + x;
    }
    let s = Qp::from_zp(acc.to_zp()?);
    let fq = Qp::from_big_rational(&f, p, (work + v + 1) as i32)?;
    (-(s * fq.inv()?)).truncate(prec as i32)
}

/// L_p(r, omega^(1-r)) via the polylogarithm sum with the first suitable N.
pub fn kubota_leopoldt(r: i64, p: u64, prec: u32) -> Result<Qp> {
    let (n, _) = auxiliary_ns(r, p)?[0];
    kubota_leopoldt_with_n(r, n, p, prec)
}

/// For r = -m <= 0: -(1 - p^m) B_{m+1} / (m+1).
pub fn kubota_leopoldt_bernoulli(m: u32, p: u64, prec: u32) -> Result<Qp> {
    let pm = BigRational::from_integer(BigInt::from(p).pow(m));
    let b = bernoulli(m as usize + 1);
    let val = -(BigRational::one() - pm) * b / BigRational::from_integer(BigInt::from(m + 1));
    Qp::from_big_rational(&val, p, prec as i32)
}

/// The level-n Kubota–Leopoldt sum (1/((r-1) p^n)) sum_{k<p^n, p not | k} k^(1-r),
/// reported to `prec` absolute digits (only about n - 2 of them are
/// reliable).
pub fn kubota_leopoldt_limit(r: i64, p: u64, n: u32, prec: u32) -> Result<Qp> {
    if r == 1 {
        return Err(Error::RIsOne);
    }
    let rm1 = r - 1;
    let mut vr = 0u32;
    let mut t = rm1.unsigned_abs();
    while t % p == 0 {
        t /= p;
        vr += 1;
    }
    let work = n + prec + vr + 1;
    let m = checked_modulus(p, work)?;
    let e = 1 - r;
    let ea = e.unsigned_abs();
    let (mut num, mut den) = (0u64, 1u64);
    for k in 1..p.pow(n) {
        if k % p == 0 {
            continue;
        }
        let ke = pow_mod(k, ea, m);
        if e >= 0 {
            num = (num + ke) % m;
        } else {
            num = (mul_mod(num, ke, m) + den) % m;
            den = mul_mod(den, ke, m);
        }
    }
    let z = Zp::new(p, work, num as i128)?;
    let s = z.div(&z.like_u64(den))?;
    let sq = Qp::from_zp(s).shift(-(n as i32));
    let rq = Qp::from_big_rational(&BigRational::from_integer(rm1.into()), p, work as i32)?;
    (sq * rq.inv()?).truncate(prec as i32)
}
