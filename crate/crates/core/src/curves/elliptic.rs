//! Point counts of genus-one models y^2 = f(x) over F_p.

use crate::error::{Error, Result};
use crate::padic::arith::{is_prime, pow_mod};
use crate::padic::fp_poly;

/// Legendre symbol (w/p) for odd p.
pub fn legendre_symbol(w: i64, p: u64) -> i64 {
    let w = w.rem_euclid(p as i64) as u64;
    if w == 0 {
        return 0;
    }
    if pow_mod(w, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn reduce(f: &[i64], p: u64) -> Vec<u64> {
    fp_poly::trim(f.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
}

fn derivative(f: &[u64], p: u64) -> Vec<u64> {
    fp_poly::trim(f.iter().enumerate().skip(1).map(|(i, &c)| (c * i as u64) % p).collect())
}

/// Projective points on the smooth model of y^2 = f(x), f of degree 3 or 4
/// with nonzero discriminant mod p, coefficients low degree first.
pub fn count_genus_one(f: &[i64], p: u64) -> Result<u64> {
    if !is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!("p = {p} must be an odd prime")));
    }
    let fp = reduce(f, p);
    let deg = fp_poly::degree(&fp);
    if !matches!(deg, Some(3) | Some(4)) || f.iter().rposition(|&c| c != 0) != deg {
        return Err(Error::SingularReduction { p });
    }
    if fp_poly::gcd(&fp, &derivative(&fp, p), p).len() != 1 {
        return Err(Error::SingularReduction { p });
    }
    let mut count: i64 = 0;
    for x in 0..p {
        let v = fp.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p);
        count += 1 + legendre_symbol(v as i64, p);
    }
    count += if deg == Some(3) { 1 } else { 1 + legendre_symbol(*fp.last().unwrap() as i64, p) };
    Ok(count as u64)
}

/// a_p = p + 1 - #E(F_p).
pub fn trace_of_frobenius(f: &[i64], p: u64) -> Result<i64> {
    Ok(p as i64 + 1 - count_genus_one(f, p)? as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cm_curve_traces() {
        // y^2 = x^3 - x has a_p = 0 for p = 3 mod 4.
        for p in [7u64, 11, 19, 23] {
            assert_eq!(trace_of_frobenius(&[0, -1, 0, 1], p).unwrap(), 0);
        }
        // Hasse bound.
        for p in [5u64, 13, 17] {
            let a = trace_of_frobenius(&[0, -1, 0, 1], p).unwrap();
            assert!(a * a <= 4 * p as i64);
        }
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(count_genus_one(&[0, 0, 0, 1], 5), Err(Error::SingularReduction { p: 5 }));
        // x^3 + 5x: leading coefficient fine, but at p = 5 it becomes x^3.
        assert!(count_genus_one(&[0, 5, 0, 1], 5).is_err());
    }

    #[test]
    fn quartic_model() {
        // z^2 = w^4 + 1 and its quartic twist agree with brute force.
        for p in [5u64, 13] {
            let brute: u64 = (0..p)
                .map(|w| (0..p).filter(|z| (z * z) % p == (w.pow(4) + 1) % p).count() as u64)
                .sum::<u64>()
                + 2;
            assert_eq!(count_genus_one(&[1, 0, 0, 0, 1], p).unwrap(), brute);
        }
    }
}
