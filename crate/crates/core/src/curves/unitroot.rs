//! Unit roots of HG-curve fibers against Dwork-type series values.

use serde::{Deserialize, Serialize};

use super::hgcurve::HGCurveSpec;
use super::zeta::{is_ordinary, unit_roots, zeta_numerator, ZetaNumerator};
use crate::error::{Error, Result};
use crate::hypergeo::{dwork_eval, dwork_orbit_tuple, dwork_prime, h_poly, h_value};
use crate::padic::hensel::poly_from_roots;
use crate::padic::{teichmuller, RationalParam, Zp};

/// (1-t)^(a+b) / (1-t^p)^(a'+b'), for t != 1 mod p.
///
/// Written as w^(a'+b') (1-t)^(a+b-p(a'+b')) with the one-unit
/// w = (1-t)^p/(1-t^p); the second exponent is an integer.
pub fn frobenius_prefactor(a: RationalParam, b: RationalParam, t: &Zp) -> Result<Zp> {
    let p = t.p();
    let prec = t.prec();
    let (ap, bp) = (dwork_prime(a, p)?, dwork_prime(b, p)?);
    let one = t.like(1);
    let u = one - *t;
    if !u.is_unit() {
        return Err(Error::OutsideDomain);
    }
    let w = u.pow(p).div(&(one - t.pow(p)))?;
    let x = ap.as_ratio() + bp.as_ratio();
    let xr = RationalParam::from_ratio(x);
    let xe = xr.embed(p, prec)?.residue();
    let shift = a.as_ratio() + b.as_ratio() - x * p as i64;
    debug_assert!(shift.is_integer());
    Ok(w.pow(xe) * u.pow_i64(shift.to_integer())?)
}

/// Product over the Dwork orbit of prefactor times F^Dw at t^(p^m); the
/// eigenvalue of the (s+1)-fold Frobenius on the (i, j) component.
pub fn component_scalar(a: RationalParam, b: RationalParam, t: &Zp, prec: u32) -> Result<Zp> {
    let p = t.p();
    let orbit = dwork_orbit_tuple(&[a, b], p)?;
    if orbit.cycle_start != 0 {
        return Err(Error::InvalidParameter("parameters are not purely periodic".into()));
    }
    let mut acc = t.like(1);
    let mut tm = *t;
    for member in &orbit.members {
        acc = acc * frobenius_prefactor(member[0], member[1], &tm)? * dwork_eval(member, &tm, prec)?;
        tm = tm.pow(p);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub i: u64,
    pub j: u64,
    pub a: RationalParam,
    pub b: RationalParam,
    /// The series value, or `None` when h(t0) = 0 mod p (non-unit component).
    pub value: Option<Zp>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HGUnitRootReport {
    pub spec: HGCurveSpec,
    pub prec: u32,
    pub counts: Vec<u64>,
    pub zeta_coeffs: Vec<i128>,
    pub ordinary: bool,
    /// Monic factor whose roots are the unit roots of Frobenius.
    pub unit_root_factor: Vec<Zp>,
    pub unit_roots: Option<Vec<Zp>>,
    pub components: Vec<Component>,
    pub series_values: Vec<Zp>,
    pub cardinality_match: bool,
    pub verdict: Verdict,
}

/// Compares the unit roots of Frobenius on the fiber at t0 with the series
/// values over the eigencomponents (i, j), as multisets: first the counts,
/// then U(T) = prod (T - value) mod p^prec, which is insensitive to order
/// and handles repeated roots.
pub fn verify_hg_unit_roots(spec: &HGCurveSpec, prec: u32, confirm: bool) -> Result<HGUnitRootReport> {
    let p = spec.p;
    if (p - 1) % spec.n != 0 || (p - 1) % spec.m != 0 {
        return Err(Error::NotImplementedGeneralS { n: spec.n, m: spec.m, p });
    }
    let zeta: ZetaNumerator = zeta_numerator(spec, confirm)?;
    let ordinary = is_ordinary(&zeta);
    let ur = unit_roots(&zeta, prec)?;
    if ur.count() == 0 {
        return Err(Error::NotOrdinary { p });
    }
    let t = teichmuller(&Zp::new(p, prec, spec.t0 as i128)?)?;
    let mut components = Vec::new();
    for i in 1..spec.n {
        for j in 1..spec.m {
            let a = RationalParam::new((spec.n - i) as i64, spec.n as i64)?;
            let b = RationalParam::new((spec.m - j) as i64, spec.m as i64)?;
            let h = h_poly(&[a, b], p)?;
            let value = if h_value(&h, spec.t0, p) == 0 { None } else { Some(component_scalar(a, b, &t, prec)?) };
            components.push(Component { i, j, a, b, value });
        }
    }
    let series_values: Vec<Zp> = components.iter().filter_map(|c| c.value).collect();
    let cardinality_match = series_values.len() == ur.count();
    let product = poly_from_roots(&series_values, t.like(0));
    let verdict = if cardinality_match && product == ur.factor { Verdict::Match } else { Verdict::Mismatch };
    Ok(HGUnitRootReport {
        spec: *spec,
        prec,
        counts: zeta.counts,
        zeta_coeffs: zeta.coeffs,
        ordinary,
        unit_root_factor: ur.factor,
        unit_roots: ur.roots,
        components,
        series_values,
        cardinality_match,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefactor_half_half() {
        let half = RationalParam::new(1, 2).unwrap();
        for p in [5u64, 7, 11] {
            let t = Zp::new(p, 5, 3 + p as i128 * 7).unwrap();
            let expect = (t.like(1) - t).div(&(t.like(1) - t.pow(p))).unwrap();
            assert_eq!(frobenius_prefactor(half, half, &t).unwrap(), expect);
        }
    }

    #[test]
    fn prefactor_at_teichmuller_points_is_a_root_of_unity() {
        // With a' = a, b' = b and t^p = t only the Teichmuller part survives:
        // omega(1-t)^(-(p-1)(a+b)).
        let p = 7;
        let t = teichmuller(&Zp::new(p, 5, 3).unwrap()).unwrap();
        let a = RationalParam::new(1, 2).unwrap();
        let b = RationalParam::new(2, 3).unwrap();
        let omega = teichmuller(&(t.like(1) - t)).unwrap();
        let got = frobenius_prefactor(a, b, &t).unwrap();
        assert_eq!(got, omega.pow_i64(-7).unwrap());
        assert_eq!(got.pow(p - 1), t.like(1));
    }

    #[test]
    fn gate() {
        let spec = HGCurveSpec::new(2, 3, 5, 2).unwrap();
        assert!(matches!(verify_hg_unit_roots(&spec, 3, false), Err(Error::NotImplementedGeneralS { .. })));
    }

    #[test]
    fn genus_two_example() {
        let spec = HGCurveSpec::new(2, 3, 7, 3).unwrap();
        let rep = verify_hg_unit_roots(&spec, 3, true).unwrap();
        assert!(rep.ordinary);
        assert_eq!(rep.verdict, Verdict::Match, "{rep:?}");
        let mut got: Vec<u64> = rep.series_values.iter().map(|v| v.residue()).collect();
        got.sort();
        assert_eq!(got, vec![39, 55]);
    }
}
