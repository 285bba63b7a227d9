//! Modified polygamma functions psi~^(r) and psi_p^(r).

use serde::{Deserialize, Serialize};

use super::euler::euler_gamma;
use super::kubota::kubota_leopoldt;
use super::polylog::{polylog_at_roots, polylog_level};
use crate::error::{Error, Result};
use crate::padic::arith::{add_mod, checked_modulus, mul_mod, pow_mod};
use crate::padic::{roots_of_unity, Qp, RationalParam, Zp};

/// Argument of a polygamma evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolygammaArg {
    Rational(RationalParam),
    Padic(Zp),
}

impl PolygammaArg {
    /// The argument to `digits` digits; p-adic inputs are truncated, so the
    /// result may carry fewer digits than asked.
    pub fn to_zp(&self, p: u64, digits: u32) -> Result<Zp> {
        match self {
            PolygammaArg::Rational(r) => r.embed(p, digits),
            PolygammaArg::Padic(z) => {
                if z.p() != p {
                    return Err(Error::InvalidParameter(format!("argument is {}-adic", z.p())));
                }
                Ok(z.truncate(digits))
            }
        }
    }
}

impl From<RationalParam> for PolygammaArg {
    fn from(r: RationalParam) -> Self {
        PolygammaArg::Rational(r)
    }
}

impl From<Zp> for PolygammaArg {
    fn from(z: Zp) -> Self {
        PolygammaArg::Padic(z)
    }
}

/// One polygamma evaluation request.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygammaRequest {
    pub r: i64,
    pub z: PolygammaArg,
    pub prec: u32,
}

/// Level s for psi~ at `prec` digits.
pub fn psi_tilde_level(p: u64, prec: u32) -> u32 {
    prec + 1 + u32::from(p == 2)
}

/// sum_{1 <= k < n, p not | k} k^-(r+1) mod p^prec.
pub fn psi_partial_sum(r: i64, n: u64, p: u64, prec: u32) -> Result<Zp> {
    let m = checked_modulus(p, prec)?;
    let e = r + 1;
    let ea = e.unsigned_abs();
    let (mut num, mut den) = (0u64, 1u64 % m);
    for k in 1..n {
        if k % p == 0 {
            continue;
        }
        let ke = pow_mod(k % m, ea, m);
        if e > 0 {
            num = add_mod(mul_mod(num, ke, m), den, m);
            den = mul_mod(den, ke, m);
        } else {
            num = add_mod(num, ke, m);
        }
    }
    let z = Zp::new(p, prec, num as i128)?;
    z.div(&z.like_u64(den))
}

/// The integer n in [1, p^s] with n = z mod p^s used to evaluate psi~(z).
pub fn psi_tilde_anchor(z: &Zp, s: u32) -> u64 {
    let t = z.truncate(s);
    if t.residue() == 0 {
        z.p().pow(s)
    } else {
        t.residue()
    }
}

/// psi~^(r)(z) = lim_{n -> z} sum_{1<=k<n, p not | k} k^-(r+1).
///
/// The output has `min(prec, digits(z) - 1)` digits.
pub fn psi_tilde(r: i64, z: &PolygammaArg, p: u64, prec: u32) -> Result<Zp> {
    let level = psi_tilde_level(p, prec);
    let zz = z.to_zp(p, level)?;
    let s = zz.prec().min(level);
    let out = prec.min(s - 1);
    if out == 0 {
        return Err(Error::InvalidPrecision(0));
    }
    let n = psi_tilde_anchor(&zz, s);
    psi_partial_sum(r, n, p, out)
}

/// N^r sum_{eps in mu_N, eps != 1} (1 - eps^-n) ln_{r+1}(eps), which equals
/// psi~^(r)(n/N). The sum is formed in the unramified level containing
/// mu_N and must land in Z_p.
pub fn psi_tilde_rational(r: i64, n: u64, big_n: u64, p: u64, prec: u32) -> Result<Zp> {
    if big_n == 0 || n >= big_n {
        return Err(Error::InvalidParameter(format!("need 0 <= n < N (n = {n}, N = {big_n})")));
    }
    if big_n % p == 0 {
        return Err(Error::PDividesN { p, n: big_n });
    }
    if n == 0 {
        return Zp::zero(p, prec);
    }
    let roots = roots_of_unity(big_n, p, prec)?;
    let vals = polylog_at_roots(r + 1, &roots, polylog_level(p, prec))?;
    let ring = &roots.ring;
    let nn = big_n as usize;
    let mut acc = ring.zero();
    for i in 1..nn {
        let inv_pow = (nn - (i * n as usize) % nn) % nn;
        let w = &ring.one() - &roots.roots[inv_pow];
        acc = &acc + &(&w * &vals[i - 1]);
    }
    let s = acc.to_zp()?;
    let nz = s.like(big_n as i128);
    Ok(s * nz.pow_i64(r)?)
}

/// psi_p^(r)(z): -gamma_p + psi~^(0)(z) for r = 0, and
/// -L_p(1+r, omega^-r) + psi~^(r)(z) otherwise.
pub fn polygamma(r: i64, z: &PolygammaArg, p: u64, prec: u32) -> Result<Qp> {
    let t = Qp::from_zp(psi_tilde(r, z, p, prec)?);
    let c = if r == 0 {
        Qp::from_zp(euler_gamma(p, prec)?)
    } else {
        kubota_leopoldt(1 + r, p, prec)?
    };
    Ok(t - c)
}

pub fn digamma(z: &PolygammaArg, p: u64, prec: u32) -> Result<Qp> {
    polygamma(0, z, p, prec)
}
