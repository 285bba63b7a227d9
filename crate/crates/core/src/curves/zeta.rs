//! Zeta numerators from point counts, and their unit roots.

use serde::{Deserialize, Serialize};

use super::ff::FiniteField;
use super::hgcurve::{count_in, HGCurveSpec};
use crate::error::{Error, Result};
use crate::padic::hensel::split_simple_roots;
use crate::padic::{unit_root_factor, Zp};

/// Largest field enumerated for the consistency count at e = g + 1.
pub const ARBITRATION_LIMIT: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaNumerator {
    pub p: u64,
    pub genus: u32,
    /// Counts over F_(p^e) for e = 1, 2, ...
    pub counts: Vec<u64>,
    /// P(T) = 1 + c_1 T + ... + p^g T^(2g), low degree first.
    pub coeffs: Vec<i128>,
    /// Degree e of the extra count that confirmed P, if one was made.
    pub confirmed_at: Option<u32>,
}

fn binomial(n: u64, k: u64) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Power sums s_e = sum alpha_i^e of the reciprocal roots, from P.
pub fn power_sums(coeffs: &[i128], upto: usize) -> Vec<i128> {
    let c = |k: usize| coeffs.get(k).copied().unwrap_or(0);
    let mut s = vec![0i128; upto + 1];
    for k in 1..=upto {
        // k c_k + sum_{i=1}^{k} s_i c_{k-i} = 0
        let mut acc = k as i128 * c(k);
        for i in 1..k {
            acc += s[i] * c(k - i);
        }
        s[k] = -acc;
    }
    s
}

/// #X(F_(p^e)) predicted by P.
pub fn predicted_count(z: &ZetaNumerator, e: u32) -> i128 {
    let s = power_sums(&z.coeffs, e as usize);
    (z.p as i128).pow(e) + 1 - s[e as usize]
}

/// Reconstruct P from counts over F_(p^e), e = 1..g, via Newton's
/// identities and c_{2g-k} = p^(g-k) c_k.
pub fn zeta_from_counts(p: u64, genus: u32, counts: &[u64]) -> Result<Vec<i128>> {
    let g = genus as usize;
    if counts.len() < g {
        return Err(Error::InvalidParameter(format!("need {g} counts, got {}", counts.len())));
    }
    let s: Vec<i128> = (1..=g)
        .map(|e| (p as i128).pow(e as u32) + 1 - counts[e - 1] as i128)
        .collect();
    let mut c = vec![0i128; 2 * g + 1];
    c[0] = 1;
    for k in 1..=g {
        let mut acc = 0i128;
        for i in 1..=k {
            acc += s[i - 1] * c[k - i];
        }
        if acc % k as i128 != 0 {
            return Err(Error::Inconsistent { e: k as u32 });
        }
        c[k] = -acc / k as i128;
    }
    for k in 0..g {
        c[2 * g - k] = (p as i128).pow((g - k) as u32) * c[k];
    }
    // Coefficient bounds from |alpha_i| = sqrt(p).
    for (k, &ck) in c.iter().enumerate() {
        let bound = binomial(2 * g as u64, k as u64);
        if ck * ck > bound * bound * (p as i128).pow(k as u32) {
            return Err(Error::Inconsistent { e: k as u32 });
        }
    }
    Ok(c)
}

/// P(T) for an HG curve. With `confirm`, the count over F_(p^(g+1)) is
/// also made (when small enough) and must agree with the prediction.
pub fn zeta_numerator(spec: &HGCurveSpec, confirm: bool) -> Result<ZetaNumerator> {
    let g = spec.genus();
    let mut counts = Vec::with_capacity(g as usize + 1);
    for e in 1..=g {
        counts.push(count_in(&FiniteField::new(spec.p, e)?, spec));
    }
    let coeffs = zeta_from_counts(spec.p, g, &counts)?;
    let mut z = ZetaNumerator { p: spec.p, genus: g, counts, coeffs, confirmed_at: None };
    let e = g + 1;
    if confirm && spec.p.checked_pow(e).is_some_and(|q| q <= ARBITRATION_LIMIT) {
        let n = count_in(&FiniteField::new(spec.p, e)?, spec);
        if predicted_count(&z, e) != n as i128 {
            return Err(Error::Inconsistent { e });
        }
        z.counts.push(n);
        z.confirmed_at = Some(e);
    }
    Ok(z)
}

/// The slope-zero part of the reciprocal polynomial T^(2g) P(1/T).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitRoots {
    pub p: u64,
    pub prec: u32,
    /// Monic factor U whose roots are the unit roots, low degree first.
    pub factor: Vec<Zp>,
    /// The roots themselves when U splits with distinct roots mod p.
    pub roots: Option<Vec<Zp>>,
}

impl UnitRoots {
    pub fn count(&self) -> usize {
        self.factor.len() - 1
    }
}

pub fn unit_roots(z: &ZetaNumerator, prec: u32) -> Result<UnitRoots> {
    let q: Vec<i128> = z.coeffs.iter().rev().copied().collect();
    let factor = unit_root_factor(&q, z.p, prec)?;
    let roots = split_simple_roots(&factor);
    Ok(UnitRoots { p: z.p, prec, factor, roots })
}

/// Ordinary: the Newton polygon has a slope-zero segment of length g.
pub fn is_ordinary(z: &ZetaNumerator) -> bool {
    z.coeffs[z.genus as usize].rem_euclid(z.p as i128) != 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::elliptic::count_genus_one;

    #[test]
    fn genus_one_numerator() {
        // N = M = 2: (1 - x^2)(1 - y^2) = t is an elliptic curve.
        let spec = HGCurveSpec::new(2, 2, 7, 3).unwrap();
        let z = zeta_numerator(&spec, true).unwrap();
        let a = 7 + 1 - z.counts[0] as i128;
        assert_eq!(z.coeffs, vec![1, -a, 7]);
        assert_eq!(z.confirmed_at, Some(2));
    }

    #[test]
    fn newton_identities_round_trip() {
        // P = (1 - 2T + 5T^2)(1 + T + 5T^2)
        let c = vec![1i128, -1, 8, -5, 25];
        let s = power_sums(&c, 4);
        let counts: Vec<u64> = (1..=2).map(|e| (5i128.pow(e) + 1 - s[e as usize]) as u64).collect();
        assert_eq!(zeta_from_counts(5, 2, &counts).unwrap(), c);
    }

    #[test]
    fn weil_bound_rejects_garbage() {
        assert!(zeta_from_counts(5, 1, &[40]).is_err());
    }

    #[test]
    fn unit_roots_of_ordinary_elliptic() {
        let f = [0i64, 1, -3, 2]; // x(1-x)(1-2x)
        let n = count_genus_one(&f, 7).unwrap() as i128;
        let a = 8 - n;
        let z = ZetaNumerator { p: 7, genus: 1, counts: vec![n as u64], coeffs: vec![1, -a, 7], confirmed_at: None };
        if a % 7 != 0 {
            let u = unit_roots(&z, 4).unwrap();
            assert_eq!(u.count(), 1);
            let r = u.roots.unwrap()[0];
            assert!((r * r - r.like(a) * r + r.like(7)).is_zero());
        }
    }
}
