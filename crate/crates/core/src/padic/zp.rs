use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::serial::ScalarRecord;
use super::arith::{add_mod, checked_modulus, inv_mod, is_prime, mul_mod, pow_mod, sub_mod};
use crate::error::{Error, Result};

/// An element of Z_p known modulo p^prec.
///
/// The residue is always the canonical representative in `[0, p^prec)`.
/// Binary operations between values of different precision return a value
/// at the smaller precision. Mixing different primes is a programming error
/// and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ScalarRecord", try_from = "ScalarRecord")]
pub struct Zp {
    p: u64,
    prec: u32,
    residue: u64,
    modulus: u64,
}

impl Zp {
    /// Checked constructor; normalizes negative values.
    pub fn new(p: u64, prec: u32, value: i128) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if prec == 0 {
            return Err(Error::InvalidPrecision(prec));
        }
        let modulus = checked_modulus(p, prec)?;
        Ok(Zp { p, prec, residue: value.rem_euclid(modulus as i128) as u64, modulus })
    }

    pub fn zero(p: u64, prec: u32) -> Result<Self> {
        Self::new(p, prec, 0)
    }

    pub fn one(p: u64, prec: u32) -> Result<Self> {
        Self::new(p, prec, 1)
    }

    /// Same prime and precision as `self`, holding `value`.
    #[inline]
    pub fn like(&self, value: i128) -> Self {
        Zp { residue: value.rem_euclid(self.modulus as i128) as u64, ..*self }
    }

    #[inline]
    pub fn like_u64(&self, value: u64) -> Self {
        Zp { residue: value % self.modulus, ..*self }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }
    #[inline]
    pub fn prec(&self) -> u32 {
        self.prec
    }
    #[inline]
    pub fn residue(&self) -> u64 {
        self.residue
    }
    /// p^prec.
    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    #[inline]
    pub fn is_unit(&self) -> bool {
        self.residue % self.p != 0
    }

    /// Valuation, or `None` when the value is zero at this precision.
    pub fn valuation(&self) -> Option<u32> {
        if self.residue == 0 {
            return None;
        }
        let mut r = self.residue;
        let mut v = 0;
        while r % self.p == 0 {
            r /= self.p;
            v += 1;
        }
        Some(v)
    }

    /// Residue mod p.
    #[inline]
    pub fn reduce_mod_p(&self) -> u64 {
        self.residue % self.p
    }

    /// Reduce to a smaller precision. Asking for more than `prec` is a no-op.
    pub fn truncate(&self, prec: u32) -> Self {
        if prec >= self.prec {
            return *self;
        }
        let modulus = self.p.pow(prec);
        Zp { prec, modulus, residue: self.residue % modulus, ..*self }
    }

    /// Reinterpret the canonical representative at a higher precision.
    ///
    /// The new high digits are zero; they carry no information about the
    /// value the residue came from. Used to add working digits before
    /// operations that divide by p.
    pub fn lift_to(&self, prec: u32) -> Result<Self> {
        if prec <= self.prec {
            return Ok(self.truncate(prec));
        }
        let modulus = checked_modulus(self.p, prec)?;
        Ok(Zp { prec, modulus, ..*self })
    }

    /// Inverse of a unit.
    pub fn inv(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let r = inv_mod(self.residue, self.modulus).ok_or(Error::NotAUnit)?;
        Ok(Zp { residue: r, ..*self })
    }

    /// `self / other` for a unit `other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(*self * other.inv()?)
    }

    pub fn pow(&self, e: u64) -> Self {
        Zp { residue: pow_mod(self.residue, e, self.modulus), ..*self }
    }

    /// Integer power, negative exponents allowed for units.
    pub fn pow_i64(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Exact division by p^k; precision drops by k.
    pub fn divide_by_p(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(*self);
        }
        if k >= self.prec {
            return Err(Error::InvalidPrecision(0));
        }
        let pk = self.p.pow(k);
        if self.residue % pk != 0 {
            return Err(Error::DivisionNotExact { k });
        }
        let prec = self.prec - k;
        Ok(Zp { prec, modulus: self.modulus / pk, residue: self.residue / pk, p: self.p })
    }

    /// Multiplication by p^k keeping the precision.
    pub fn mul_p_pow(&self, k: u32) -> Self {
        if k >= self.prec {
            return Zp { residue: 0, ..*self };
        }
        *self * self.like_u64(self.p.pow(k))
    }

    /// Whether `self` and `other` agree modulo p^k.
    pub fn agrees_mod(&self, other: &Self, k: u32) -> bool {
        assert_eq!(self.p, other.p, "mismatched primes");
        let k = k.min(self.prec).min(other.prec);
        let m = self.p.pow(k);
        self.residue % m == other.residue % m
    }

    /// Signed representative in (-p^prec/2, p^prec/2].
    pub fn signed(&self) -> i128 {
        let r = self.residue as i128;
        let m = self.modulus as i128;
        if 2 * r > m {
            r - m
        } else {
            r
        }
    }

    /// Base-p digits, least significant first, exactly `prec` of them.
    pub fn digits(&self) -> Vec<u64> {
        let mut r = self.residue;
        (0..self.prec)
            .map(|_| {
                let d = r % self.p;
                r /= self.p;
                d
            })
            .collect()
    }

    #[inline]
    fn check(&self, other: &Self) -> (u32, u64) {
        assert_eq!(self.p, other.p, "mismatched primes");
        if self.prec <= other.prec {
            (self.prec, self.modulus)
        } else {
            (other.prec, other.modulus)
        }
    }
}

impl fmt::Debug for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.residue, self.p, self.prec)
    }
}

impl fmt::Display for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.residue, self.p, self.prec)
    }
}

impl Add for Zp {
    type Output = Zp;
    #[inline]
    fn add(self, o: Zp) -> Zp {
        let (prec, m) = self.check(&o);
        Zp { p: self.p, prec, modulus: m, residue: add_mod(self.residue % m, o.residue % m, m) }
    }
}

impl Sub for Zp {
    type Output = Zp;
    #[inline]
    fn sub(self, o: Zp) -> Zp {
        let (prec, m) = self.check(&o);
        Zp { p: self.p, prec, modulus: m, residue: sub_mod(self.residue % m, o.residue % m, m) }
    }
}

impl Mul for Zp {
    type Output = Zp;
    #[inline]
    fn mul(self, o: Zp) -> Zp {
        let (prec, m) = self.check(&o);
        Zp { p: self.p, prec, modulus: m, residue: mul_mod(self.residue, o.residue, m) }
    }
}

impl Neg for Zp {
    type Output = Zp;
    #[inline]
    fn neg(self) -> Zp {
        Zp { residue: sub_mod(0, self.residue, self.modulus), ..self }
    }
}

impl<'a> Add<&'a Zp> for Zp {
    type Output = Zp;
    fn add(self, o: &Zp) -> Zp {
        self + *o
    }
}
impl<'a> Sub<&'a Zp> for Zp {
    type Output = Zp;
    fn sub(self, o: &Zp) -> Zp {
        self - *o
    }
}
impl<'a> Mul<&'a Zp> for Zp {
    type Output = Zp;
    fn mul(self, o: &Zp) -> Zp {
        self * *o
    }
}

impl AddAssign for Zp {
    fn add_assign(&mut self, o: Zp) {
        *self = *self + o;
    }
}
impl SubAssign for Zp {
    fn sub_assign(&mut self, o: Zp) {
        *self = *self - o;
    }
}
impl MulAssign for Zp {
    fn mul_assign(&mut self, o: Zp) {
        *self = *self * o;
    }
}
