//! Hypergeometric-side values (1 - p/alpha) F^(sigma)(t) for elliptic and
//! Fermat families, and the non-vanishing experiment at t = 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::elliptic::count_genus_one;
use super::ff::FiniteField;
use crate::error::{Error, Result};
use crate::hypergeo::{dwork_orbit_tuple, g_coeffs, gauss_mod_p, logtype_eval, HGParams, Twist};
use crate::padic::arith::{gcd, inv_mod, is_prime};
use crate::padic::{hensel_quadratic_unit_root, RationalParam, Zp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// y^2 = x(1-x)(1-(1-a)x), parameters (1/2, 1/2) at t = a.
    Legendre,
    /// 3y^2 = 2x^3 - 3x^2 + 1 - a, parameters (1/6, 5/6) at t = a.
    Sextic,
    /// y^2 = x^3 + (3x + 4a)^2, parameters (1/3, 2/3) at t = a.
    Cubic,
    /// y^2 = x^3 - 2x^2 + (1-a)x, parameters (1/4, 3/4) at t = a.
    Quartic,
    /// (x^2 - 1)(y^2 - 1) = a, parameters (1/2, 1/2) at t = 1.
    ProductConic,
    /// z^3 + w^3 = 1, parameters (1/3, 1/3) at t = 1, untwisted.
    Fermat33,
    /// z^2 + w^4 = 1, parameters (1/2, 1/4) at t = 1, untwisted.
    Fermat24,
    /// z^2 = w^4 + 1, parameters (1/4, 1/4) at t = 1, untwisted.
    Fermat24Star,
}

pub const FAMILIES: [Family; 8] = [
    Family::Legendre,
    Family::Sextic,
    Family::Cubic,
    Family::Quartic,
    Family::ProductConic,
    Family::Fermat33,
    Family::Fermat24,
    Family::Fermat24Star,
];

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Legendre => "legendre",
            Family::Sextic => "sextic",
            Family::Cubic => "cubic",
            Family::Quartic => "quartic",
            Family::ProductConic => "product-conic",
            Family::Fermat33 => "fermat33",
            Family::Fermat24 => "fermat24",
            Family::Fermat24Star => "fermat24-star",
        }
    }

    pub fn params(&self) -> [RationalParam; 2] {
        let r = |n, d| RationalParam::new(n, d).expect("nonzero denominator");
        match self {
            Family::Legendre | Family::ProductConic => [r(1, 2), r(1, 2)],
            Family::Sextic => [r(1, 6), r(5, 6)],
            Family::Cubic => [r(1, 3), r(2, 3)],
            Family::Quartic => [r(1, 4), r(3, 4)],
            Family::Fermat33 => [r(1, 3), r(1, 3)],
            Family::Fermat24 => [r(1, 2), r(1, 4)],
            Family::Fermat24Star => [r(1, 4), r(1, 4)],
        }
    }

    pub fn is_fermat(&self) -> bool {
        matches!(self, Family::Fermat33 | Family::Fermat24 | Family::Fermat24Star)
    }

    fn min_prime(&self) -> u64 {
        match self {
            Family::Sextic | Family::Cubic | Family::Fermat33 => 5,
            _ => 3,
        }
    }

    /// Projective points over F_p of the smooth model; `a` is ignored for
    /// the Fermat curves.
    pub fn point_count(&self, a: RationalParam, p: u64) -> Result<u64> {
        if !is_prime(p) || p < self.min_prime() {
            return Err(Error::InvalidParameter(format!("p = {p} is too small for {self}")));
        }
        let a = reduce(a, p)?;
        match self {
            Family::Legendre => count_genus_one(&[0, 1, -(2 - a), 1 - a], p),
            // (3y)^2 = 3(2x^3 - 3x^2 + 1 - a)
            Family::Sextic => count_genus_one(&[3 * (1 - a), 0, -9, 6], p),
            Family::Cubic => count_genus_one(&[16 * a * a, 24 * a, 9, 1], p),
            Family::Quartic => count_genus_one(&[0, 1 - a, -2, 1], p),
            Family::ProductConic => {
                if a == 0 || a == 1 {
                    return Err(Error::SingularReduction { p });
                }
                let field = FiniteField::new(p, 1)?;
                let mut n = gcd(2, p - 1) * 2;
                for x in 0..p {
                    let u = field.sub(1, field.mul(x, x));
                    if u == 0 {
                        continue;
                    }
                    let w = field.sub(1, field.mul(field.from_int(a), field.inv(u).expect("u != 0")));
                    n += field.count_nth_roots(w, 2);
                }
                Ok(n)
            }
            Family::Fermat33 => {
                let field = FiniteField::new(p, 1)?;
                let affine: u64 = (0..p).map(|w| field.count_nth_roots(field.sub(1, field.pow(w, 3)), 3)).sum();
                Ok(affine + gcd(3, p - 1))
            }
            Family::Fermat24 => count_genus_one(&[1, 0, 0, 0, -1], p),
            Family::Fermat24Star => count_genus_one(&[1, 0, 0, 0, 1], p),
        }
    }
}

fn reduce(a: RationalParam, p: u64) -> Result<i64> {
    if !a.is_p_integral(p) {
        return Err(Error::DenominatorDivisibleByP { den: a.den(), p });
    }
    let d = inv_mod(a.den().rem_euclid(p as i64) as u64, p).ok_or(Error::NotAUnit)?;
    Ok((a.num().rem_euclid(p as i64) as u64 * d % p) as i64)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FAMILIES
            .iter()
            .find(|f| f.name() == s)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureValue {
    pub family: Family,
    pub a: RationalParam,
    pub p: u64,
    pub prec: u32,
    pub params: Vec<RationalParam>,
    pub twist: Twist,
    pub point: RationalParam,
    pub points: u64,
    pub a_p: i64,
    pub unit_root: Zp,
    /// F^(sigma)(point).
    pub series_value: Zp,
    /// (1 - p / unit_root) * series_value.
    pub lhs: Zp,
}

/// (1 - p alpha^-1) F^(sigma)_a(t) with alpha the unit root of the fiber.
pub fn conjecture_lhs(family: Family, a: RationalParam, p: u64, prec: u32) -> Result<ConjectureValue> {
    let points = family.point_count(a, p)?;
    let a_p = p as i64 + 1 - points as i64;
    if a_p.rem_euclid(p as i64) == 0 {
        return Err(Error::NotOrdinary { p });
    }
    let unit_root = hensel_quadratic_unit_root(a_p, p, prec)?;
    let (twist, point) = match family {
        Family::Legendre | Family::Sextic | Family::Cubic | Family::Quartic => (Twist::PowerOneMinusP(a), a),
        Family::ProductConic => (Twist::PowerOneMinusP(a), RationalParam::integer(1)),
        _ => (Twist::one(), RationalParam::integer(1)),
    };
    let params = HGParams::new(family.params().to_vec(), p, twist)?;
    let series_value = logtype_eval(&params, &point.embed(p, prec)?, prec)?;
    let prec = series_value.prec();
    let lhs = (Zp::one(p, prec)? - unit_root.truncate(prec).inv()?.mul_p_pow(1)) * series_value;
    Ok(ConjectureValue {
        family,
        a,
        p,
        prec,
        params: family.params().to_vec(),
        twist,
        point,
        points,
        a_p,
        unit_root: unit_root.truncate(prec),
        series_value,
        lhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonvanishingEntry {
    pub i: u64,
    pub j: u64,
    pub a: RationalParam,
    pub b: RationalParam,
    /// [F_{a^(k), b^(k)}(1)]_{<p} != 0 mod p along the whole Dwork orbit.
    pub orbit_gauss_nonzero: bool,
    /// G(1)_{<p^n} mod p^n for n = 1, 2, ...
    pub values: Vec<u64>,
    /// Least n with G(1)_{<p^n} != 0 mod p^n.
    pub nonvanishing_at: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonvanishingReport {
    pub n: u64,
    pub m: u64,
    pub p: u64,
    pub nmax: u32,
    /// N | p - 1 and M | p - 1.
    pub divisibility: bool,
    pub entries: Vec<NonvanishingEntry>,
    /// Pairs with G(1)_{<p^n} = 0 mod p^n for every n <= nmax.
    pub flagged: Vec<(u64, u64)>,
}

/// G_{i/N, j/M}(1)_{<p^n} mod p^n with sigma(t) = t^p, over 0 < i < N,
/// 0 < j < M, i/N + j/M < 1.
pub fn nonvanishing(n: u64, m: u64, p: u64, nmax: u32) -> Result<NonvanishingReport> {
    if n < 2 || m < 2 || nmax == 0 {
        return Err(Error::InvalidParameter("need N, M >= 2 and nmax >= 1".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let d = (p as usize).checked_pow(nmax).filter(|&d| d <= 1 << 24).ok_or(Error::PrecisionTooLarge { p, prec: nmax })?;
    let mut entries = Vec::new();
    for i in 1..n {
        for j in 1..m {
            if i * m + j * n >= n * m {
                continue;
            }
            let a = RationalParam::new(i as i64, n as i64)?;
            let b = RationalParam::new(j as i64, m as i64)?;
            let orbit = dwork_orbit_tuple(&[a, b], p)?;
            let mut orbit_gauss_nonzero = true;
            for member in &orbit.members {
                orbit_gauss_nonzero &= gauss_mod_p(member[0], member[1], p)?.truncated != 0;
            }
            let g = g_coeffs(&HGParams::untwisted(vec![a, b], p)?, d - 1, nmax)?;
            let mut values = Vec::new();
            let mut sum = Zp::zero(p, nmax)?;
            let mut upto = 0;
            for k in 1..=nmax {
                let end = (p as usize).pow(k);
                for idx in upto..end {
                    sum += g.coeff(idx);
                }
                upto = end;
                values.push(sum.truncate(k).residue());
            }
            let nonvanishing_at = values.iter().position(|&v| v != 0).map(|k| k as u32 + 1);
            entries.push(NonvanishingEntry { i, j, a, b, orbit_gauss_nonzero, values, nonvanishing_at });
        }
    }
    let flagged = entries.iter().filter(|e| e.nonvanishing_at.is_none()).map(|e| (e.i, e.j)).collect();
    Ok(NonvanishingReport {
        n,
        m,
        p,
        nmax,
        divisibility: (p - 1) % n == 0 && (p - 1) % m == 0,
        entries,
        flagged,
    })
}
