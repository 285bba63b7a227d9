use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::arith::checked_modulus;
use super::zp::Zp;
use crate::error::{Error, Result};

/// An element p^v * u of Q_p, where u is a unit (or zero) known to
/// `u.prec()` digits. The absolute precision is v + u.prec().
///
/// Some L-values and polygamma values have a pole-like factor 1/p; this type
/// carries them without losing track of which digits are known.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Qp {
    v: i32,
    u: Zp,
}

impl Qp {
    pub fn from_zp(z: Zp) -> Self {
        Qp { v: 0, u: z }.normalized()
    }

    /// Zero known to absolute precision `abs`.
    pub fn zero(p: u64, abs: i32) -> Result<Self> {
        Ok(Qp { v: abs - 1, u: Zp::zero(p, 1)? })
    }

    /// p^v * u.
    pub fn from_parts(v: i32, u: Zp) -> Self {
        Qp { v, u }.normalized()
    }

    /// Exact rational embedded to absolute precision `abs`.
    pub fn from_big_rational(r: &BigRational, p: u64, abs: i32) -> Result<Self> {
        if r.is_zero() {
            return Self::zero(p, abs);
        }
        let pb = BigInt::from(p);
        let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
        let mut v = 0i32;
        while num.is_multiple_of(&pb) {
            num /= &pb;
            v += 1;
        }
        while den.is_multiple_of(&pb) {
            den /= &pb;
            v -= 1;
        }
        let rel = abs - v;
        if rel <= 0 {
            return Self::zero(p, abs);
        }
        let m = BigInt::from(checked_modulus(p, rel as u32)?);
        let reduce = |x: &BigInt| -> i128 {
            let r = x.mod_floor(&m);
            r.to_i128().expect("reduced below modulus")
        };
        let n = Zp::new(p, rel as u32, reduce(&num))?;
        let d = n.like(reduce(&den));
        Ok(Qp { v, u: n * d.inv()? })
    }

    pub fn p(&self) -> u64 {
        self.u.p()
    }

    pub fn abs_prec(&self) -> i32 {
        self.v + self.u.prec() as i32
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero()
    }

    /// Valuation, `None` for zero at this precision.
    pub fn valuation(&self) -> Option<i32> {
        if self.u.is_zero() {
            None
        } else {
            Some(self.v)
        }
    }

    /// The unit part u (meaningful only when nonzero).
    pub fn unit_part(&self) -> Zp {
        self.u
    }

    fn normalized(self) -> Self {
        match self.u.valuation() {
            Some(k) if k > 0 => Qp { v: self.v + k as i32, u: self.u.divide_by_p(k).expect("valuation") },
            _ => self,
        }
    }

    /// Representation p^w * x with w <= v and x known to `abs - w` digits.
    fn rescale(&self, w: i32, abs: i32) -> Result<Zp> {
        let rel = (abs - w) as u32;
        let d = (self.v - w) as u32;
        let z = self.u.lift_to(rel.max(self.u.prec()))?;
        Ok(z.mul_p_pow(d).truncate(rel))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.u.is_zero() {
            return Err(Error::NotAUnit);
        }
        Ok(Qp { v: -self.v, u: self.u.inv()? })
    }

    /// Multiply by p^k.
    pub fn shift(&self, k: i32) -> Self {
        Qp { v: self.v + k, u: self.u }
    }

    /// Reduce to absolute precision `abs` (no-op if already lower).
    pub fn truncate(&self, abs: i32) -> Result<Self> {
        if abs >= self.abs_prec() {
            return Ok(*self);
        }
        if abs <= self.v {
            return Self::zero(self.p(), abs);
        }
        Ok(Qp { v: self.v, u: self.u.truncate((abs - self.v) as u32) })
    }

    /// Convert to Z_p; fails for negative valuation.
    pub fn to_zp(&self) -> Result<Zp> {
        let abs = self.abs_prec();
        if abs < 1 {
            return Err(Error::InvalidPrecision(0));
        }
        if self.u.is_zero() {
            return Zp::zero(self.p(), abs as u32);
        }
        if self.v < 0 {
            return Err(Error::InvalidParameter("value has negative valuation".into()));
        }
        self.rescale(0, abs)
    }

    /// Whether the two values agree modulo p^k. False when either is known to
    /// fewer than k absolute digits.
    pub fn agrees_mod(&self, other: &Qp, k: i32) -> bool {
        if self.abs_prec() < k || other.abs_prec() < k {
            return false;
        }
        let d = *self - *other;
        match d.truncate(k) {
            Ok(t) => t.is_zero(),
            Err(_) => false,
        }
    }

    /// Signed digits of p^(-min(v,0)) * value, used for display.
    fn scaled_residue(&self) -> (i32, Zp) {
        let w = self.v.min(0);
        let abs = self.abs_prec();
        if abs - w <= 0 {
            return (w, Zp::zero(self.p(), 1).expect("p prime"));
        }
        (w, self.rescale(w, abs).expect("precision within bounds"))
    }

    /// (shift, residue) such that value = p^shift * residue, shift <= 0.
    pub fn display_parts(&self) -> (i32, Zp) {
        self.scaled_residue()
    }
}

impl fmt::Debug for Qp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (w, r) = self.scaled_residue();
        if w == 0 {
            write!(f, "{} (mod {}^{})", r.residue(), self.p(), self.abs_prec())
        } else {
            write!(f, "{}^{} * {} (mod {}^{})", self.p(), w, r.residue(), self.p(), self.abs_prec())
        }
    }
}

impl fmt::Display for Qp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for Qp {
    type Output = Qp;
    fn add(self, o: Qp) -> Qp {
        assert_eq!(self.p(), o.p(), "mismatched primes");
        let abs = self.abs_prec().min(o.abs_prec());
        let w = self.v.min(o.v);
        if abs <= w {
            return Qp::zero(self.p(), abs).expect("p prime");
        }
        let a = self.rescale(w, abs).expect("precision within bounds");
        let b = o.rescale(w, abs).expect("precision within bounds");
        Qp { v: w, u: a + b }.normalized()
    }
}

impl Neg for Qp {
    type Output = Qp;
    fn neg(self) -> Qp {
        Qp { v: self.v, u: -self.u }
    }
}

impl Sub for Qp {
    type Output = Qp;
    fn sub(self, o: Qp) -> Qp {
        self + (-o)
    }
}

impl Mul for Qp {
    type Output = Qp;
    fn mul(self, o: Qp) -> Qp {
        assert_eq!(self.p(), o.p(), "mismatched primes");
        if self.is_zero() || o.is_zero() {
            let abs = match (self.is_zero(), o.is_zero()) {
                (true, true) => self.abs_prec() + o.abs_prec(),
                (true, false) => self.abs_prec() + o.v,
                _ => o.abs_prec() + self.v,
            };
            return Qp::zero(self.p(), abs).expect("p prime");
        }
        Qp { v: self.v + o.v, u: self.u * o.u }
    }
}

impl From<Zp> for Qp {
    fn from(z: Zp) -> Qp {
        Qp::from_zp(z)
    }
}

/// Helper for exact rationals with small parts.
pub fn big_rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
