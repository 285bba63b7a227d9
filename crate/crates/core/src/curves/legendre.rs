//! The Legendre family y^2 = x(1-x)(1-ax) and Dwork's unit root formula.

use serde::{Deserialize, Serialize};

use super::elliptic::count_genus_one;
use crate::error::{Error, Result};
use crate::hypergeo::dwork_eval;
use crate::padic::arith::is_prime;
use crate::padic::{hensel_quadratic_unit_root, teichmuller, RationalParam, Zp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendreCurve {
    pub p: u64,
    pub a: u64,
}

impl LegendreCurve {
    pub fn new(p: u64, a: i64) -> Result<Self> {
        if !is_prime(p) || p <= 3 {
            return Err(Error::InvalidParameter(format!("p = {p} must be a prime > 3")));
        }
        let a = a.rem_euclid(p as i64) as u64;
        if a == 0 || a == 1 {
            return Err(Error::SingularReduction { p });
        }
        Ok(LegendreCurve { p, a })
    }

    /// x(1-x)(1-ax) = a x^3 - (1+a) x^2 + x.
    pub fn cubic(&self) -> [i64; 4] {
        let a = self.a as i64;
        [0, 1, -(1 + a), a]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendreCount {
    pub points: u64,
    pub a_p: i64,
}

pub fn count_legendre(curve: &LegendreCurve) -> Result<LegendreCount> {
    let points = count_genus_one(&curve.cubic(), curve.p)?;
    Ok(LegendreCount { points, a_p: curve.p as i64 + 1 - points as i64 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DworkUnitRootReport {
    pub p: u64,
    pub a: u64,
    pub prec: u32,
    pub points: u64,
    pub a_p: i64,
    /// Root of T^2 - a_p T + p of valuation 0.
    pub unit_root: Zp,
    /// (-1)^((p-1)/2) F^Dw_{1/2,1/2}(teichmuller(a)).
    pub series_value: Zp,
    pub matches: bool,
}

/// Compares the unit root from point counting with Dwork's formula.
pub fn verify_dwork_unit_root(p: u64, a: i64, prec: u32) -> Result<DworkUnitRootReport> {
    let curve = LegendreCurve::new(p, a)?;
    let count = count_legendre(&curve)?;
    if count.a_p.rem_euclid(p as i64) == 0 {
        return Err(Error::NotOrdinary { p });
    }
    let unit_root = hensel_quadratic_unit_root(count.a_p, p, prec)?;
    let half = RationalParam::new(1, 2)?;
    let t = teichmuller(&Zp::new(p, prec, curve.a as i128)?)?;
    let f = dwork_eval(&[half, half], &t, prec)?;
    let series_value = if (p - 1) / 2 % 2 == 0 { f } else { -f };
    Ok(DworkUnitRootReport {
        p,
        a: curve.a,
        prec,
        points: count.points,
        a_p: count.a_p,
        unit_root,
        series_value,
        matches: unit_root == series_value,
    })
}
