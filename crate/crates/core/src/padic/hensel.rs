//! Hensel lifting: the unit root of T^2 - aT + p and unit-root factors of
//! integer polynomials.

use super::arith::is_prime;
use super::fp_poly;
use super::zp::Zp;
use crate::error::{Error, Result};

/// The root of T^2 - a_p T + p of valuation 0.
pub fn hensel_quadratic_unit_root(a_p: i64, p: u64, prec: u32) -> Result<Zp> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a_p.rem_euclid(p as i64) == 0 {
        return Err(Error::NotOrdinary { p });
    }
    let a = Zp::new(p, prec, a_p as i128)?;
    let pp = a.like(p as i128);
    let two = a.like(2);
    let mut x = a;
    let mut digits = 1;
    while digits < prec {
        let fx = x * x - a * x + pp;
        let dfx = two * x - a;
        x = x - fx * dfx.inv()?;
        digits *= 2;
    }
    Ok(x)
}

/// Polynomials over Z/p^k, coefficients low degree first.
type ZPoly = Vec<Zp>;

fn poly_mul(a: &[Zp], b: &[Zp], zero: Zp) -> ZPoly {
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += *x * *y;
        }
    }
    out
}

fn reduce(a: &[Zp]) -> Vec<u64> {
    fp_poly::trim(a.iter().map(|c| c.reduce_mod_p()).collect())
}

/// Given a monic Q in Z[T] whose reduction is T^m * Ubar(T) with
/// Ubar(0) != 0, lift Ubar to the monic factor U of Q over Z_p / p^prec.
/// The roots of U are exactly the unit roots of Q.
pub fn unit_root_factor(q: &[i128], p: u64, prec: u32) -> Result<Vec<Zp>> {
    let zero = Zp::new(p, prec, 0)?;
    let deg = q.len() - 1;
    if q[deg] != 1 {
        return Err(Error::InvalidParameter("polynomial must be monic".into()));
    }
    let qz: ZPoly = q.iter().map(|&c| zero.like(c)).collect();
    let qbar = reduce(&qz);
    let m = qbar.iter().position(|&c| c != 0).unwrap_or(deg);
    let ubar: Vec<u64> = qbar[m..].to_vec();
    let udeg = ubar.len() - 1;
    if udeg == 0 {
        return Ok(vec![zero.like(1)]);
    }
    if m == 0 {
        return Ok(qz);
    }
    let mut vbar = vec![0u64; m + 1];
    vbar[m] = 1;
    // s*U + t*V = 1 mod p.
    let (g, _s, t) = fp_poly::ext_gcd(&ubar, &vbar, p);
    debug_assert_eq!(g, vec![1]);
    let mut u: ZPoly = ubar.iter().map(|&c| zero.like(c as i128)).collect();
    let mut v: ZPoly = vbar.iter().map(|&c| zero.like(c as i128)).collect();
    for k in 1..prec {
        let uv = poly_mul(&u, &v, zero);
        let diff: Vec<Zp> = (0..qz.len()).map(|i| qz[i] - uv[i]).collect();
        // E = (Q - UV) / p^k mod p.
        let pk = p.pow(k);
        let e: Vec<u64> = fp_poly::trim(
            diff.iter()
                .map(|c| {
                    debug_assert_eq!(c.residue() % pk, 0);
                    (c.residue() / pk) % p
                })
                .collect(),
        );
        if e.is_empty() {
            continue;
        }
        // U' = U + p^k b with b = e*t mod Ubar, V' = V + p^k a with
        // a = (e - b*Vbar)/Ubar.
        let b = fp_poly::rem(&fp_poly::mul(&e, &t, p), &ubar, p);
        let (a, r) = fp_poly::divrem(&fp_poly::sub(&e, &fp_poly::mul(&b, &vbar, p), p), &ubar, p);
        debug_assert!(r.is_empty());
        let scale = zero.like(pk as i128);
        for (i, &c) in b.iter().enumerate() {
            u[i] += scale * zero.like(c as i128);
        }
        for (i, &c) in a.iter().enumerate() {
            v[i] += scale * zero.like(c as i128);
        }
    }
    Ok(u)
}

/// If the unit-root factor splits over F_p with distinct roots, lift each
/// root; otherwise `None`.
pub fn split_simple_roots(u: &[Zp]) -> Option<Vec<Zp>> {
    let p = u[0].p();
    let ubar = reduce(u);
    let roots: Vec<u64> = (1..p)
        .filter(|&x| {
            let mut acc = 0u64;
            for &c in ubar.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc == 0
        })
        .collect();
    if roots.len() != ubar.len() - 1 {
        return None;
    }
    let prec = u[0].prec();
    let eval = |x: Zp| u.iter().rev().fold(x.like(0), |acc, &c| acc * x + c);
    let deval = |x: Zp| {
        u.iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(x.like(0), |acc, (i, &c)| acc * x + c * x.like(i as i128))
    };
    let mut out = Vec::new();
    for r in roots {
        let mut x = u[0].like(r as i128);
        let d = deval(x);
        if !d.is_unit() {
            return None;
        }
        let mut digits = 1;
        while digits < prec {
            x = x - eval(x) * deval(x).inv().ok()?;
            digits *= 2;
        }
        out.push(x);
    }
    Some(out)
}

/// Monic polynomial with the given roots.
pub fn poly_from_roots(roots: &[Zp], zero: Zp) -> Vec<Zp> {
    let mut acc = vec![zero.like(1)];
    for r in roots {
        acc = poly_mul(&acc, &[-*r, zero.like(1)], zero);
    }
    acc
}
