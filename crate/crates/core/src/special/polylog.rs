//! p-adic polylogarithms ln_r(x) = sum_{p not | k} x^k / k^r.

use crate::error::{Error, Result};
use crate::padic::arith::{add_mod, mul_mod, pow_mod};
use crate::padic::{PadicRing, RootsOfUnity, Zp, Zq};

/// Truncation level s used by the limit formula for `prec` digits.
pub fn polylog_level(p: u64, prec: u32) -> u32 {
    prec + 1 + u32::from(p == 2)
}

fn check_argument<R: PadicRing>(x: &R) -> Result<()> {
    if !x.is_unit() {
        return Err(Error::NotAUnit);
    }
    if !(x.clone() - x.one_like()).is_unit() {
        return Err(Error::XCongruentOne);
    }
    Ok(())
}

/// ln_r(x) for a unit x with x != 1 mod p, at the precision of x.
///
/// Uses the rational closed form for r <= 0 and the limit formula
/// (1/(1 - x^(p^s))) sum_{k < p^s, p not | k} x^k/k^r otherwise.
pub fn polylog<R: PadicRing>(r: i64, x: &R) -> Result<R> {
    check_argument(x)?;
    if r <= 0 {
        polylog_closed_form((-r) as u32, x)
    } else {
        polylog_limit(r, x, polylog_level(x.prime(), x.precision()))
    }
}

/// Eulerian polynomial A_m, coefficients low degree first, with
/// sum_{n>=1} n^m x^n = x A_m(x) / (1-x)^(m+1).
pub fn eulerian_polynomial(m: u32) -> Vec<i128> {
    let mut a = vec![1i128];
    for n in 1..=m as usize {
        let mut next = vec![0i128; n];
        for k in 0..n {
            let keep = if k < a.len() { (k as i128 + 1) * a[k] } else { 0 };
            let shift = if k >= 1 && k - 1 < a.len() { (n - k) as i128 * a[k - 1] } else { 0 };
            next[k] = keep + shift;
        }
        a = next;
    }
    a
}

/// sum_{n>=1} n^m x^n as a rational function evaluated at x.
fn power_sum_series<R: PadicRing>(m: u32, x: &R) -> Result<R> {
    let a = eulerian_polynomial(m);
    let mut poly = x.zero_like();
    for c in a.iter().rev() {
        poly = poly * x.clone() + x.int_like(*c);
    }
    let den = (x.one_like() - x.clone()).power(m as u64 + 1);
    Ok(x.clone() * poly * den.inverse()?)
}

/// ln_{-m}(x) = l_m(x) - p^m l_m(x^p) with l_m(x) = sum n^m x^n.
pub fn polylog_closed_form<R: PadicRing>(m: u32, x: &R) -> Result<R> {
    check_argument(x)?;
    let p = x.prime();
    let a = power_sum_series(m, x)?;
    let b = power_sum_series(m, &x.power(p))?;
    let pm = x.int_like(p as i128).power(m as u64);
    Ok(a - pm * b)
}

/// The level-s limit expression for ln_r(x).
pub fn polylog_limit<R: PadicRing>(r: i64, x: &R, s: u32) -> Result<R> {
    check_argument(x)?;
    let p = x.prime();
    let ps = p.checked_pow(s).ok_or(Error::InvalidParameter(format!("level {p}^{s} too large")))?;
    let one = x.one_like();
    let e = r.unsigned_abs();
    // Accumulate num/den to avoid inverting every k.
    let mut num = x.zero_like();
    let mut den = x.one_like();
    let mut xk = one.clone();
    for k in 1..ps {
        xk = xk * x.clone();
        if k % p == 0 {
            continue;
        }
        let kr = x.int_like(k as i128).power(e);
        if r > 0 {
            num = num * kr.clone() + xk.clone() * den.clone();
            den = den * kr;
        } else {
            num = num + xk.clone() * kr;
        }
    }
    let xps = xk * x.clone();
    let denom = (one - xps) * den;
    Ok(num * denom.inverse()?)
}

/// ln_r(zeta^j) for j = 1..N-1, in this order, where zeta is the primitive
/// root of `roots`. The sums over k are grouped by k mod N so that only N
/// scalar partial sums are formed.
pub fn polylog_at_roots(r: i64, roots: &RootsOfUnity, s: u32) -> Result<Vec<Zq>> {
    let n = roots.n as usize;
    let ring = &roots.ring;
    let p = ring.p();
    let zero = Zp::new(p, ring.prec(), 0)?;
    let pk = zero.modulus();
    let ps = p.checked_pow(s).ok_or(Error::InvalidParameter(format!("level {p}^{s} too large")))?;
    let e = r.unsigned_abs();
    let mut nums = vec![0u64; n];
    let mut dens = vec![1u64 % pk; n];
    for k in 1..ps {
        if k % p == 0 {
            continue;
        }
        let j = (k % n as u64) as usize;
        let kr = pow_mod(k % pk, e, pk);
        if r > 0 {
            nums[j] = add_mod(mul_mod(nums[j], kr, pk), dens[j], pk);
            dens[j] = mul_mod(dens[j], kr, pk);
        } else {
            nums[j] = add_mod(nums[j], kr, pk);
        }
    }
    let sums: Vec<Zp> = nums
        .iter()
        .zip(&dens)
        .map(|(&a, &b)| Ok(zero.like_u64(a) * zero.like_u64(b).inv()?))
        .collect::<Result<_>>()?;
    let ps_mod_n = (ps % n as u64) as usize;
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut acc = ring.zero();
        for (j, sj) in sums.iter().enumerate() {
            acc = &acc + &roots.roots[(i * j) % n].scale(sj);
        }
        let denom = &ring.one() - &roots.roots[(i * ps_mod_n) % n];
        out.push(&acc * &denom.inv()?);
    }
    Ok(out)
}
