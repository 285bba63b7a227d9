use crate::error::Result;
use crate::padic::arith::{checked_modulus, mul_mod};
use crate::padic::{iwasawa_log, Zp};

/// Level s used for `prec` digits of gamma_p and of the Volkenborn
/// log-integrals.
pub fn gamma_level(p: u64, prec: u32) -> u32 {
    prec + 2 + u32::from(p == 2)
}

/// The p-adic Euler constant gamma_p = -lim p^-s sum_{j<p^s, p not | j} log j.
pub fn euler_gamma(p: u64, prec: u32) -> Result<Zp> {
    euler_gamma_at_level(p, prec, gamma_level(p, prec))
}

/// The level-s approximation, reported to `prec` digits. The sum of logs
/// is the log of the product, so only one logarithm is evaluated.
pub fn euler_gamma_at_level(p: u64, prec: u32, s: u32) -> Result<Zp> {
    let work = s + prec + 1;
    let m = checked_modulus(p, work)?;
    let ps = p.pow(s);
    let mut prod = 1u64;
    for j in 1..ps {
        if j % p != 0 {
            prod = mul_mod(prod, j, m);
        }
    }
    let l = iwasawa_log(&Zp::new(p, work, prod as i128)?)?;
    Ok(-l.divide_by_p(s)?.truncate(prec))
}
