//! Domain certificates and values of F^Dw and F^(sigma) at points.

use super::coeffs::{g_coeffs, g_output_precision, hg_coeffs};
use super::params::{dwork_orbit_tuple, dwork_prime_tuple, validate_params, HGParams};
use crate::error::{Error, Result};
use crate::padic::arith::{add_mod, mul_mod};
use crate::padic::{fp_poly, RationalParam, Zp};

/// h(t) = prod over the Dwork orbit of [F_{a^(i)}(t)]_{<p}, over F_p.
pub fn h_poly(a: &[RationalParam], p: u64) -> Result<Vec<u64>> {
    validate_params(a, p)?;
    let orbit = dwork_orbit_tuple(a, p)?;
    let mut h = vec![1u64];
    for member in &orbit.members {
        let f = hg_coeffs(member, p, p as usize - 1, 1)?;
        h = fp_poly::mul(&h, f.residues(), p);
    }
    Ok(fp_poly::trim(h))
}

/// h(x) for x in F_p.
pub fn h_value(h: &[u64], x: u64, p: u64) -> u64 {
    h.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x % p, p), c, p))
}

/// OutsideDomain unless h(alpha) is a unit.
pub fn check_domain(a: &[RationalParam], alpha: &Zp) -> Result<()> {
    let p = alpha.p();
    let h = h_poly(a, p)?;
    if h_value(&h, alpha.reduce_mod_p(), p) == 0 {
        return Err(Error::OutsideDomain);
    }
    Ok(())
}

fn pow_p(n: u32, p: u64) -> Result<usize> {
    (p as usize)
        .checked_pow(n)
        .filter(|&d| d <= 1 << 28)
        .ok_or_else(|| Error::InvalidParameter(format!("truncation {p}^{n} is too long")))
}

/// [F_a]_{<p^n}(alpha) / [F_{a'}]_{<p^(n-1)}(alpha^p) mod p^prec.
pub fn dwork_ratio(a: &[RationalParam], alpha: &Zp, n: u32, prec: u32) -> Result<Zp> {
    let p = alpha.p();
    let d = pow_p(n, p)?;
    let primed = dwork_prime_tuple(a, p)?;
    let num = hg_coeffs(a, p, d - 1, prec)?.eval(alpha);
    let den = hg_coeffs(&primed, p, d / p as usize - 1, prec)?.eval(&alpha.pow(p));
    if !den.is_unit() {
        return Err(Error::OutsideDomain);
    }
    num.div(&den)
}

/// Truncation level n used for `prec` digits.
pub fn dwork_level(p: u64, prec: u32) -> u32 {
    prec + u32::from(p == 2)
}

/// Dwork's p-adic hypergeometric function F_a(t)/F_{a'}(t^p) at alpha.
pub fn dwork_eval(a: &[RationalParam], alpha: &Zp, prec: u32) -> Result<Zp> {
    validate_params(a, alpha.p())?;
    check_domain(a, alpha)?;
    let prec = prec.min(alpha.prec());
    dwork_ratio(a, alpha, dwork_level(alpha.p(), prec), prec)
}

/// [G_a]_{<p^n}(alpha) / [F_a]_{<p^n}(alpha), to the digits G is known to.
pub fn logtype_ratio(params: &HGParams, alpha: &Zp, n: u32, prec: u32) -> Result<Zp> {
    let p = params.p();
    let d = pow_p(n, p)?;
    let g = g_coeffs(params, d - 1, prec)?;
    let f = hg_coeffs(params.a(), p, d - 1, g.prec())?;
    let den = f.eval(alpha);
    if !den.is_unit() {
        return Err(Error::OutsideDomain);
    }
    g.eval(alpha).div(&den)
}

/// Truncation level for `prec` digits, one higher in the weak p = 2 case.
pub fn logtype_level(params: &HGParams, prec: u32) -> u32 {
    prec + params.congruence_loss()
}

/// The logarithmic-type function G_a(t)/F_a(t) at alpha.
pub fn logtype_eval(params: &HGParams, alpha: &Zp, prec: u32) -> Result<Zp> {
    if alpha.p() != params.p() {
        return Err(Error::InvalidParameter("evaluation point over a different prime".into()));
    }
    check_domain(params.a(), alpha)?;
    let prec = g_output_precision(params, prec.min(alpha.prec()))?;
    logtype_ratio(params, alpha, logtype_level(params, prec), prec)
}
