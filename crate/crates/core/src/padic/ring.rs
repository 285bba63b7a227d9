use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::zp::Zp;
use super::zq::{UnramifiedRing, Zq};
use crate::error::Result;

/// Operations shared by [`Zp`] and [`Zq`], so that Teichmüller lifts,
/// logarithms and polylogarithms can be written once.
pub trait PadicRing:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn prime(&self) -> u64;
    fn precision(&self) -> u32;
    /// Degree f of the residue field over F_p.
    fn residue_degree(&self) -> u32;
    /// An integer in the same ring as `self`.
    fn int_like(&self, v: i128) -> Self;
    fn is_unit(&self) -> bool;
    fn is_zero(&self) -> bool;
    fn valuation(&self) -> Option<u32>;
    fn inverse(&self) -> Result<Self>;
    fn power(&self, e: u64) -> Self;
    fn frob(&self) -> Self;
    /// Truncate, or reinterpret the representative at a higher precision.
    fn with_precision(&self, prec: u32) -> Result<Self>;
    /// Exact division by p^k; precision drops by k.
    fn div_p_exact(&self, k: u32) -> Result<Self>;
    fn agrees(&self, other: &Self, k: u32) -> bool;

    fn zero_like(&self) -> Self {
        self.int_like(0)
    }
    fn one_like(&self) -> Self {
        self.int_like(1)
    }
    /// Residue field size p^f.
    fn q(&self) -> u128 {
        (self.prime() as u128).pow(self.residue_degree())
    }
}

impl PadicRing for Zp {
    fn prime(&self) -> u64 {
        self.p()
    }
    fn precision(&self) -> u32 {
        self.prec()
    }
    fn residue_degree(&self) -> u32 {
        1
    }
    fn int_like(&self, v: i128) -> Self {
        self.like(v)
    }
    fn is_unit(&self) -> bool {
        Zp::is_unit(self)
    }
    fn is_zero(&self) -> bool {
        Zp::is_zero(self)
    }
    fn valuation(&self) -> Option<u32> {
        Zp::valuation(self)
    }
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
    fn power(&self, e: u64) -> Self {
        self.pow(e)
    }
    fn frob(&self) -> Self {
        *self
    }
    fn with_precision(&self, prec: u32) -> Result<Self> {
        self.lift_to(prec)
    }
    fn div_p_exact(&self, k: u32) -> Result<Self> {
        self.divide_by_p(k)
    }
    fn agrees(&self, other: &Self, k: u32) -> bool {
        self.agrees_mod(other, k)
    }
}

impl PadicRing for Zq {
    fn prime(&self) -> u64 {
        self.p()
    }
    fn precision(&self) -> u32 {
        self.prec()
    }
    fn residue_degree(&self) -> u32 {
        self.degree()
    }
    fn int_like(&self, v: i128) -> Self {
        self.ring().from_int(v)
    }
    fn is_unit(&self) -> bool {
        Zq::is_unit(self)
    }
    fn is_zero(&self) -> bool {
        Zq::is_zero(self)
    }
    fn valuation(&self) -> Option<u32> {
        Zq::valuation(self)
    }
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
    fn power(&self, e: u64) -> Self {
        self.pow(e)
    }
    fn frob(&self) -> Self {
        self.frobenius()
    }
    fn with_precision(&self, prec: u32) -> Result<Self> {
        if prec == self.prec() {
            return Ok(self.clone());
        }
        let ring: Arc<UnramifiedRing> = self.ring().at_precision(prec)?;
        Ok(self.at_precision(&ring))
    }
    fn div_p_exact(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        let target = self.ring().at_precision(self.prec() - k)?;
        self.divide_by_p(k, &target)
    }
    fn agrees(&self, other: &Self, k: u32) -> bool {
        self.agrees_mod(other, k)
    }
}
