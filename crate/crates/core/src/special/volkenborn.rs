//! Volkenborn-integral routes to psi_p^(r).

use num_bigint::BigInt;
use num_rational::BigRational;

use super::euler::gamma_level;
use super::polygamma::PolygammaArg;
use crate::error::{Error, Result};
use crate::padic::arith::{add_mod, mul_mod, pow_mod};
use crate::padic::{iwasawa_log, Qp};

/// Level s for the integral of (z+t)^-r (r != 0) or log(z+t) (r = 0).
pub fn volkenborn_level(r: i64, p: u64, prec: u32) -> u32 {
    let mut vr = 0;
    let mut t = r.unsigned_abs();
    while t != 0 && t % p == 0 {
        t /= p;
        vr += 1;
    }
    gamma_level(p, prec) + vr
}

/// Working digits needed in z for a `prec`-digit Volkenborn evaluation.
pub fn volkenborn_input_digits(r: i64, p: u64, prec: u32) -> u32 {
    volkenborn_level(r, p, prec) + prec + 1
}

/// For r = 0, the integral of 1_{Z_p^x}(z+t) log(z+t) dt; for r != 0,
/// -(1/r) times the integral of 1_{Z_p^x}(z+t) (z+t)^-r dt. Both equal
/// psi_p^(r)(z).
///
/// A p-adic z must carry [`volkenborn_input_digits`] digits for a full
/// `prec`-digit answer; shorter inputs give proportionally fewer digits.
pub fn volkenborn_psi(r: i64, z: &PolygammaArg, p: u64, prec: u32) -> Result<Qp> {
    let s = volkenborn_level(r, p, prec);
    let want = volkenborn_input_digits(r, p, prec);
    let zz = z.to_zp(p, want)?;
    let work = zz.prec();
    if work <= s + 1 {
        return Err(Error::InvalidParameter(format!(
            "argument has {work} digits, need more than {}",
            s + 1
        )));
    }
    let out = (prec as i32).min((work - s - 1) as i32);
    let m = zz.modulus();
    let z0 = zz.residue();
    let ps = p.pow(s);
    if r == 0 {
        let mut prod = 1u64 % m;
        for j in 0..ps {
            let x = add_mod(z0, j % m, m);
            if x % p != 0 {
                prod = mul_mod(prod, x, m);
            }
        }
        let l = iwasawa_log(&zz.like_u64(prod))?;
        return Qp::from_zp(l).shift(-(s as i32)).truncate(out);
    }
    let ea = r.unsigned_abs();
    let (mut num, mut den) = (0u64, 1u64 % m);
    for j in 0..ps {
        let x = add_mod(z0, j % m, m);
        if x % p == 0 {
            continue;
        }
        let xe = pow_mod(x, ea, m);
        if r > 0 {
            num = add_mod(mul_mod(num, xe, m), den, m);
            den = mul_mod(den, xe, m);
        } else {
            num = add_mod(num, xe, m);
        }
    }
    let sum = zz.like_u64(num).div(&zz.like_u64(den))?;
    let minus_inv_r = BigRational::new(BigInt::from(-1), BigInt::from(r));
    let c = Qp::from_big_rational(&minus_inv_r, p, work as i32 + 1)?;
    (Qp::from_zp(sum).shift(-(s as i32)) * c).truncate(out)
}
