//! Teichmüller lifts and logarithms, generic over Z_p and Z_q.

use super::arith::ceil_log;
use super::ring::PadicRing;
use crate::error::{Error, Result};

/// The unique (q-1)-th root of unity congruent to `z` mod p.
pub fn teichmuller<R: PadicRing>(z: &R) -> Result<R> {
    if !z.is_unit() {
        return Err(Error::NotAUnit);
    }
    // Each application of x -> x^p^f gains one digit.
    let mut x = z.clone();
    let steps = (z.precision() - 1) * z.residue_degree();
    for _ in 0..steps {
        x = x.power(z.prime());
    }
    Ok(x)
}

/// log(1 + x) by its power series, for `u = 1 + x` with x divisible by p.
pub fn log_one_unit<R: PadicRing>(u: &R) -> Result<R> {
    let prec = u.precision();
    let p = u.prime();
    let x = u.clone() - u.one_like();
    let v = match x.valuation() {
        None => return Ok(u.zero_like()),
        Some(v) if v >= 1 => v as u64,
        Some(_) => {
            return Err(Error::InvalidParameter("log series needs an argument = 1 mod p".into()))
        }
    };
    // Terms with n*v - v_p(n) >= prec vanish.
    let mut last = 1u64;
    let mut n = 1u64;
    while n <= 4 * prec as u64 + 8 {
        if n * v < prec as u64 + ceil_log(p, n + 1) as u64 + 1 {
            last = n;
        }
        n += 1;
    }
    let guard = ceil_log(p, last + 1);
    let work = x.with_precision(prec + guard)?;
    let mut acc = u.zero_like();
    let mut xn = work.clone();
    for n in 1..=last {
        let mut k = 0u32;
        let mut m = n;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        let term = xn.div_p_exact(k)?.with_precision(prec)?;
        let term = term * u.int_like(m as i128).inverse()?;
        acc = if n % 2 == 1 { acc + term } else { acc - term };
        xn = xn * work.clone();
    }
    Ok(acc)
}

/// Iwasawa logarithm on units: log(p) = 0 and log of roots of unity is 0.
pub fn iwasawa_log<R: PadicRing>(z: &R) -> Result<R> {
    if !z.is_unit() {
        return Err(Error::NotAUnit);
    }
    let prec = z.precision();
    let qm1 = (z.q() - 1) as u64;
    if z.prime() == 2 {
        // z^(2(q-1)) lies in 1 + 4Z_q; one guard digit covers the division by 2.
        let zz = z.with_precision(prec + 1)?;
        let u = zz.power(qm1).power(2);
        let l = log_one_unit(&u)?.div_p_exact(1)?;
        return Ok(l * z.int_like(qm1 as i128).inverse()?);
    }
    let u = z.power(qm1);
    Ok(log_one_unit(&u)? * z.int_like(qm1 as i128).inverse()?)
}

/// (1/p) log(z^p / F(z)), the logarithm twisted by Frobenius. The output
/// carries one digit less than the input.
pub fn log_p_twisted<R: PadicRing>(z: &R) -> Result<R> {
    if !z.is_unit() {
        return Err(Error::NotAUnit);
    }
    let u = z.power(z.prime()) * z.frob().inverse()?;
    log_one_unit(&u)?.div_p_exact(1)
}
