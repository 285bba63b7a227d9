//! Coefficients A_n of F_a(t) and B_n of G_a(t).
//!
//! A_n is carried as p^v * u with u a unit mod p^W, so the divisions by
//! p^k in B_{mp^k} never run out of digits. The big-rational routes are
//! kept as slow references.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::params::{dwork_prime_tuple, validate_params, HGParams};
use super::series::TruncatedSeries;
use crate::error::{Error, Result};
use crate::padic::arith::{ceil_log, checked_modulus, inv_mod, mul_mod, pow_mod, reduce_i128, sub_mod};
use crate::padic::{log_one_unit, Qp, RationalParam, Zp};
use crate::special::psi_tilde;

/// A_0..A_D as p^v * u, u known mod p^w.
#[derive(Clone, Debug)]
pub struct ValuedCoeffs {
    p: u64,
    w: u32,
    vals: Vec<u32>,
    units: Vec<u64>,
}

impl ValuedCoeffs {
    pub fn degree(&self) -> usize {
        self.vals.len() - 1
    }

    pub fn valuation(&self, n: usize) -> u32 {
        self.vals[n]
    }

    /// A_n as an element of Q_p (it is integral).
    pub fn get(&self, n: usize) -> Qp {
        let u = Zp::new(self.p, self.w, self.units[n] as i128).expect("valid precision");
        Qp::from_parts(self.vals[n] as i32, u)
    }

    /// A_n mod p^prec, prec <= w.
    pub fn residue(&self, n: usize, prec: u32) -> u64 {
        let v = self.vals[n];
        if v >= prec {
            return 0;
        }
        let m = self.p.pow(prec);
        mul_mod(self.units[n] % m, self.p.pow(v), m)
    }

    /// The series sum A_n t^n mod p^prec.
    pub fn series(&self, prec: u32) -> TruncatedSeries {
        assert!(prec <= self.w);
        let coeffs = (0..self.vals.len()).map(|n| self.residue(n, prec)).collect();
        TruncatedSeries::from_residues(self.p, prec, coeffs)
    }
}

/// For n in 1..=d, the inverse mod m of n with its p-part removed, by a
/// single modular inversion (prefix products).
pub(crate) fn unit_part_inverses(p: u64, d: usize, m: u64) -> Vec<u64> {
    let units: Vec<u64> = (0..=d as u64)
        .map(|n| {
            let mut u = n.max(1);
            while u % p == 0 {
                u /= p;
            }
            u % m
        })
        .collect();
    let mut prefix = vec![1 % m; d + 1];
    for n in 1..=d {
        prefix[n] = mul_mod(prefix[n - 1], units[n], m);
    }
    let mut inv = inv_mod(prefix[d], m).expect("units");
    let mut out = vec![1 % m; d + 1];
    for n in (1..=d).rev() {
        out[n] = mul_mod(inv, prefix[n - 1], m);
        inv = mul_mod(inv, units[n], m);
    }
    out
}

fn split_p(mut x: i128, p: u64) -> (u32, i128) {
    let pi = p as i128;
    let mut v = 0;
    while x % pi == 0 {
        x /= pi;
        v += 1;
    }
    (v, x)
}

/// A_n = prod_i (a_i)_n / n!^s for n <= d, with units mod p^w.
pub fn hg_valued(a: &[RationalParam], p: u64, d: usize, w: u32) -> Result<ValuedCoeffs> {
    validate_params(a, p)?;
    let m = checked_modulus(p, w)?;
    let s = a.len() as u64;
    let den_inv = a.iter().try_fold(1 % m, |acc, x| {
        inv_mod(reduce_i128(x.den() as i128, m), m).map(|i| mul_mod(acc, i, m)).ok_or(Error::NotAUnit)
    })?;
    let inv_n = unit_part_inverses(p, d, m);
    let mut vals = Vec::with_capacity(d + 1);
    let mut units = Vec::with_capacity(d + 1);
    vals.push(0u32);
    units.push(1 % m);
    let (mut v, mut u) = (0i64, 1 % m);
    for n in 1..=d {
        let k = (n - 1) as i128;
        for x in a {
            let num = x.num() as i128 + k * x.den() as i128;
            let (vx, ux) = split_p(num, p);
            v += vx as i64;
            u = mul_mod(u, reduce_i128(ux, m), m);
        }
        let (vn, _) = split_p(n as i128, p);
        v -= s as i64 * vn as i64;
        u = mul_mod(mul_mod(u, den_inv, m), pow_mod(inv_n[n], s, m), m);
        if v < 0 {
            return Err(Error::InvalidParameter(format!("coefficient A_{n} is not p-integral")));
        }
        vals.push(v as u32);
        units.push(u);
    }
    Ok(ValuedCoeffs { p, w, vals, units })
}

/// F_a(t) up to degree d, coefficients mod p^prec.
pub fn hg_coeffs(a: &[RationalParam], p: u64, d: usize, prec: u32) -> Result<TruncatedSeries> {
    Ok(hg_valued(a, p, d, prec)?.series(prec))
}

/// A_0..A_d as exact rationals.
pub fn hg_coeffs_exact(a: &[RationalParam], d: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(d + 1);
    let mut cur = BigRational::one();
    out.push(cur.clone());
    for n in 1..=d {
        for x in a {
            let xr = BigRational::new(x.num().into(), x.den().into());
            cur *= xr + BigRational::from_integer(BigInt::from(n - 1));
            cur /= BigRational::from_integer(BigInt::from(n));
        }
        out.push(cur.clone());
    }
    out
}

/// B_1..B_d for an exact rational twist c, as exact rationals; entry 0 is
/// left at zero (B_0 is transcendental).
pub fn g_tail_exact(a: &[RationalParam], p: u64, c: &BigRational, d: usize) -> Result<Vec<BigRational>> {
    let primed = dwork_prime_tuple(a, p)?;
    let fa = hg_coeffs_exact(a, d);
    let fb = hg_coeffs_exact(&primed, d / p as usize);
    let mut out = vec![BigRational::zero(); d + 1];
    for n in 1..=d {
        let nr = BigRational::from_integer(BigInt::from(n));
        out[n] = if n as u64 % p != 0 {
            &fa[n] / nr
        } else {
            let j = n / p as usize;
            (&fa[n] - Pow::pow(c, j as u32) * &fb[j]) / nr
        };
    }
    Ok(out)
}

/// Digits of B_n produced for a requested precision: limited by the twist.
pub fn g_output_precision(params: &HGParams, prec: u32) -> Result<u32> {
    let out = match params.twist().known_digits() {
        Some(k) => prec.min(k.saturating_sub(1)),
        None => prec,
    };
    if out == 0 {
        return Err(Error::InvalidPrecision(0));
    }
    Ok(out)
}

/// Working digits for the units of A_n and A'_n when forming B_n, n <= d.
pub fn g_working_digits(p: u64, d: usize, prec: u32) -> u32 {
    prec + ceil_log(p, d as u64 + 1) + 2
}

/// B_0 = sum_i (psi_p(a_i) + gamma_p) - log(c)/p.
pub fn g_constant(params: &HGParams, prec: u32) -> Result<Zp> {
    let p = params.p();
    let mut cache: HashMap<RationalParam, Zp> = HashMap::new();
    let mut acc = Zp::zero(p, prec)?;
    for x in params.a() {
        let v = match cache.get(x) {
            Some(v) => *v,
            None => {
                let v = psi_tilde(0, &(*x).into(), p, prec)?;
                cache.insert(*x, v);
                v
            }
        };
        acc = acc + v;
    }
    if !params.twist().is_one() {
        let c = params.twist().value(p, prec + 1)?;
        let l = log_one_unit(&c)?.divide_by_p(1)?;
        acc = acc - l;
    }
    Ok(acc)
}

/// G_a(t) up to degree d. The result has `g_output_precision` digits.
pub fn g_coeffs(params: &HGParams, d: usize, prec: u32) -> Result<TruncatedSeries> {
    let p = params.p();
    let out = g_output_precision(params, prec)?;
    let w = g_working_digits(p, d, out);
    let mw = checked_modulus(p, w)?;
    let mo = p.pow(out);
    let fa = hg_valued(params.a(), p, d, w)?;
    let primed = params.primed()?;
    let fb = hg_valued(primed.a(), p, d / p as usize, w)?;
    let c = params.twist().value(p, w)?.lift_to(w)?.residue();
    let inv_n = unit_part_inverses(p, d, mo);
    let mut coeffs = vec![0u64; d + 1];
    coeffs[0] = g_constant(params, out)?.residue();
    let mut cpow = 1 % mw;
    let mut next_j = 0usize;
    for n in 1..=d {
        let (k, _) = split_p(n as i128, p);
        if k == 0 {
            coeffs[n] = mul_mod(fa.residue(n, out), inv_n[n], mo);
            continue;
        }
        let j = n / p as usize;
        while next_j < j {
            cpow = mul_mod(cpow, c, mw);
            next_j += 1;
        }
        let mk = p.pow(out + k);
        let diff = sub_mod(fa.residue(n, out + k), mul_mod(cpow % mk, fb.residue(j, out + k), mk), mk);
        let pk = p.pow(k);
        if diff % pk != 0 {
            return Err(Error::DivisionNotExact { k });
        }
        coeffs[n] = mul_mod((diff / pk) % mo, inv_n[n], mo);
    }
    Ok(TruncatedSeries::from_residues(p, out, coeffs))
}
