//! The curves (1 - x^N)(1 - y^M) = t and their point counts.

use serde::{Deserialize, Serialize};

use super::ff::FiniteField;
use crate::error::{Error, Result};
use crate::padic::arith::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HGCurveSpec {
    pub n: u64,
    pub m: u64,
    pub p: u64,
    /// Fiber parameter, reduced mod p.
    pub t0: u64,
}

impl HGCurveSpec {
    pub fn new(n: u64, m: u64, p: u64, t0: i64) -> Result<Self> {
        if n < 2 || m < 2 {
            return Err(Error::InvalidParameter("N and M must be at least 2".into()));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if (n * m) % p == 0 {
            return Err(Error::PDividesN { p, n: n * m });
        }
        let t = t0.rem_euclid(p as i64) as u64;
        if t == 0 || t == 1 {
            return Err(Error::SingularReduction { p });
        }
        Ok(HGCurveSpec { n, m, p, t0: t })
    }

    /// (N - 1)(M - 1).
    pub fn genus(&self) -> u32 {
        ((self.n - 1) * (self.m - 1)) as u32
    }
}

/// Points over F_(p^e) of the smooth model in P^1 x P^1:
/// affine solutions, plus x^N = 1 at y = infinity, plus y^M = 1 at x = infinity.
pub fn count_hg_curve(spec: &HGCurveSpec, e: u32) -> Result<u64> {
    let field = FiniteField::new(spec.p, e)?;
    Ok(count_in(&field, spec))
}

pub(crate) fn count_in(f: &FiniteField, spec: &HGCurveSpec) -> u64 {
    let q = f.size();
    let t = f.from_int(spec.t0 as i64);
    let mut affine = 0u64;
    for x in 0..q {
        let u = f.sub(1, f.pow(x, spec.n));
        if u == 0 {
            continue;
        }
        // 1 - y^M = t/u
        let w = f.sub(1, f.mul(t, f.inv(u).unwrap()));
        affine += f.count_nth_roots(w, spec.m);
    }
    let at_inf_y = f.count_nth_roots(1, spec.n);
    let at_inf_x = f.count_nth_roots(1, spec.m);
    affine + at_inf_y + at_inf_x
}
