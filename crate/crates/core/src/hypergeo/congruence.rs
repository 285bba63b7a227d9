//! Coefficientwise checks of the truncation congruences.

use serde::{Deserialize, Serialize};

use super::coeffs::{g_coeffs, hg_coeffs};
use super::params::{dwork_prime_tuple, validate_params, HGParams};
use super::series::TruncatedSeries;
use crate::error::{Error, Result};
use crate::padic::{RationalParam, Zp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CongruenceKind {
    /// F [G]_{<p^n} = G [F]_{<p^n}.
    LogType,
    /// F_a(t) [F_a'(t^p)]_{<p^n} = F_a'(t^p) [F_a(t)]_{<p^n}.
    Dwork,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub kind: CongruenceKind,
    pub p: u64,
    pub params: Vec<RationalParam>,
    pub twist: Option<String>,
    pub n: u32,
    /// The congruence is tested modulo p^modulus_exponent.
    pub modulus_exponent: u32,
    pub degree: usize,
    pub pass: bool,
    pub first_failure: Option<usize>,
    /// In the weak p = 2 case, whether it also held modulo p^n.
    pub full_modulus_pass: Option<bool>,
}

fn check_sizes(p: u64, n: u32, degree: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let pn = (p as usize)
        .checked_pow(n)
        .ok_or_else(|| Error::InvalidParameter("p^n overflows".into()))?;
    if degree < pn {
        return Err(Error::InvalidParameter(format!("degree {degree} is below p^n = {pn}")));
    }
    Ok(pn)
}

/// X [Y]_{<m} - Y [X]_{<m}.
fn cross_difference(x: &TruncatedSeries, y: &TruncatedSeries, m: usize) -> TruncatedSeries {
    x.mul(&y.truncated(m)).sub(&y.mul(&x.truncated(m)))
}

fn first_nonzero(s: &TruncatedSeries, k: u32) -> Option<usize> {
    let m = s.p().pow(k);
    s.residues().iter().position(|c| c % m != 0)
}

/// Checks F [G]_{<p^n} = G [F]_{<p^n} mod p^n up to `degree`, or mod
/// p^(n-1) in the weak p = 2 case.
pub fn congruence_report(params: &HGParams, n: u32, degree: usize) -> Result<CongruenceReport> {
    let p = params.p();
    let pn = check_sizes(p, n, degree)?;
    if let Some(k) = params.twist().known_digits() {
        if k < n + 1 {
            return Err(Error::InvalidPrecision(k));
        }
    }
    let g = g_coeffs(params, degree, n)?;
    let f = hg_coeffs(params.a(), p, degree, n)?;
    let diff = cross_difference(&f, &g, pn);
    let e = n - params.congruence_loss();
    let first_failure = first_nonzero(&diff, e);
    Ok(CongruenceReport {
        kind: CongruenceKind::LogType,
        p,
        params: params.a().to_vec(),
        twist: Some(params.twist().to_string()),
        n,
        modulus_exponent: e,
        degree,
        pass: first_failure.is_none(),
        first_failure,
        full_modulus_pass: params.weak().then(|| first_nonzero(&diff, n).is_none()),
    })
}

/// Checks F_a(t) [F_a'(t^p)]_{<p^n} = F_a'(t^p) [F_a(t)]_{<p^n} mod p^n.
pub fn dwork_congruence_report(a: &[RationalParam], p: u64, n: u32, degree: usize) -> Result<CongruenceReport> {
    validate_params(a, p)?;
    let pn = check_sizes(p, n, degree)?;
    let primed = dwork_prime_tuple(a, p)?;
    let f = hg_coeffs(a, p, degree, n)?;
    let fp = hg_coeffs(&primed, p, degree, n)?.substitute_frobenius(&Zp::one(p, n)?);
    let diff = cross_difference(&f, &fp, pn);
    let first_failure = first_nonzero(&diff, n);
    Ok(CongruenceReport {
        kind: CongruenceKind::Dwork,
        p,
        params: a.to_vec(),
        twist: None,
        n,
        modulus_exponent: n,
        degree,
        pass: first_failure.is_none(),
        first_failure,
        full_modulus_pass: None,
    })
}
