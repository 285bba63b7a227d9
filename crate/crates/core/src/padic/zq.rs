use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::arith::{add_mod, checked_modulus, is_prime, mul_mod, sub_mod};
use super::fp_poly;
use super::zp::Zp;
use crate::error::{Error, Result};

/// The ring Z_q / p^prec with q = p^f, presented as (Z/p^prec)[x]/(m(x)).
pub struct UnramifiedRing {
    p: u64,
    f: u32,
    prec: u32,
    pk: u64,
    poly: Vec<u64>,
    frob_powers: Vec<Vec<u64>>,
}

impl UnramifiedRing {
    /// Degree-f level with the lexicographically least irreducible modulus.
    pub fn new(p: u64, f: u32, prec: u32) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive".into()));
        }
        Self::with_modulus(p, prec, fp_poly::least_irreducible(p, f))
    }

    /// Level defined by a given monic polynomial with coefficients in [0, p).
    pub fn with_modulus(p: u64, prec: u32, poly: Vec<u64>) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if prec == 0 {
            return Err(Error::InvalidPrecision(0));
        }
        if poly.last() != Some(&1) || !fp_poly::is_irreducible(&poly, p) {
            return Err(Error::InvalidParameter(format!(
                "modulus {poly:?} is not monic irreducible mod {p}"
            )));
        }
        let pk = checked_modulus(p, prec)?;
        let f = (poly.len() - 1) as u32;
        let mut ring = UnramifiedRing { p, f, prec, pk, poly, frob_powers: Vec::new() };
        ring.frob_powers = ring.compute_frobenius_powers()?;
        Ok(Arc::new(ring))
    }

    /// The same level at another precision.
    pub fn at_precision(&self, prec: u32) -> Result<Arc<Self>> {
        Self::with_modulus(self.p, prec, self.poly.clone())
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.f
    }
    pub fn prec(&self) -> u32 {
        self.prec
    }
    /// Coefficients of the modulus, low degree first.
    pub fn modulus_poly(&self) -> &[u64] {
        &self.poly
    }
    /// Size of the residue field.
    pub fn q(&self) -> u128 {
        (self.p as u128).pow(self.f)
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.p == other.p && self.prec == other.prec && self.poly == other.poly
    }

    pub fn element(self: &Arc<Self>, coeffs: &[i128]) -> Zq {
        let mut c = vec![0u64; self.f as usize];
        for (i, &v) in coeffs.iter().enumerate() {
            if i < c.len() {
                c[i] = v.rem_euclid(self.pk as i128) as u64;
            } else {
                panic!("too many coordinates for degree {}", self.f);
            }
        }
        Zq { ring: Arc::clone(self), c }
    }

    pub fn from_int(self: &Arc<Self>, v: i128) -> Zq {
        self.element(&[v])
    }

    pub fn zero(self: &Arc<Self>) -> Zq {
        self.from_int(0)
    }

    pub fn one(self: &Arc<Self>) -> Zq {
        self.from_int(1)
    }

    /// The generator x of the power basis.
    pub fn generator(self: &Arc<Self>) -> Zq {
        if self.f == 1 {
            // x is the root of x + c0, i.e. -c0.
            return self.from_int(-(self.poly[0] as i128));
        }
        self.element(&[0, 1])
    }

    /// Embed a Z_p value (truncated to this ring's precision).
    pub fn from_zp(self: &Arc<Self>, z: &Zp) -> Zq {
        assert_eq!(z.p(), self.p, "mismatched primes");
        assert!(z.prec() >= self.prec, "Z_p value has fewer digits than the ring");
        self.from_int(z.residue() as i128)
    }

    /// Element whose residue mod p has base-p index `idx` (digit i is the
    /// coefficient of x^i). Used to enumerate F_q.
    pub fn from_index(self: &Arc<Self>, mut idx: u128) -> Zq {
        let mut c = vec![0u64; self.f as usize];
        for ci in c.iter_mut() {
            *ci = (idx % self.p as u128) as u64;
            idx /= self.p as u128;
        }
        Zq { ring: Arc::clone(self), c }
    }

    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.f as usize;
        let m = self.pk;
        if f == 1 {
            return vec![mul_mod(a[0], b[0], m)];
        }
        let mut t = vec![0u64; 2 * f - 1];
        for i in 0..f {
            if a[i] == 0 {
                continue;
            }
            for j in 0..f {
                t[i + j] = add_mod(t[i + j], mul_mod(a[i], b[j], m), m);
            }
        }
        for k in (f..2 * f - 1).rev() {
            let c = t[k];
            if c == 0 {
                continue;
            }
            t[k] = 0;
            for i in 0..f {
                let s = mul_mod(c, self.poly[i], m);
                t[k - f + i] = sub_mod(t[k - f + i], s, m);
            }
        }
        t.truncate(f);
        t
    }

    fn eval_poly(&self, x: &[u64]) -> Vec<u64> {
        // Horner on the modulus polynomial.
        let f = self.f as usize;
        let mut acc = vec![0u64; f];
        for &coef in self.poly.iter().rev() {
            acc = self.mul_raw(&acc, x);
            acc[0] = add_mod(acc[0], coef % self.pk, self.pk);
        }
        acc
    }

    fn eval_derivative(&self, x: &[u64]) -> Vec<u64> {
        let f = self.f as usize;
        let mut acc = vec![0u64; f];
        for (i, &coef) in self.poly.iter().enumerate().skip(1).rev() {
            acc = self.mul_raw(&acc, x);
            acc[0] = add_mod(acc[0], mul_mod(coef, i as u64, self.pk), self.pk);
        }
        acc
    }

    fn inv_raw(&self, a: &[u64]) -> Result<Vec<u64>> {
        let p = self.p;
        let abar: Vec<u64> = a.iter().map(|&c| c % p).collect();
        if fp_poly::degree(&abar).is_none() {
            return Err(Error::NotAUnit);
        }
        let (_, s, _) = fp_poly::ext_gcd(&abar, &self.poly, p);
        let mut y = vec![0u64; self.f as usize];
        for (i, &c) in s.iter().enumerate() {
            y[i] = c;
        }
        // Newton: y <- y (2 - a y); each round doubles the correct digits.
        let mut digits = 1u32;
        while digits < self.prec {
            let ay = self.mul_raw(a, &y);
            let mut two_minus: Vec<u64> = ay.iter().map(|&c| sub_mod(0, c, self.pk)).collect();
            two_minus[0] = add_mod(two_minus[0], 2 % self.pk, self.pk);
            y = self.mul_raw(&y, &two_minus);
            digits *= 2;
        }
        Ok(y)
    }

    fn compute_frobenius_powers(&self) -> Result<Vec<Vec<u64>>> {
        let f = self.f as usize;
        let mut theta = vec![0u64; f];
        if f == 1 {
            return Ok(vec![vec![1]]);
        }
        theta[1] = 1;
        // Start from theta^p, which is a root of the modulus mod p, then Newton.
        let mut r = self.pow_raw(&theta, self.p);
        let mut digits = 1u32;
        while digits < self.prec {
            let num = self.eval_poly(&r);
            let den = self.inv_raw(&self.eval_derivative(&r))?;
            let step = self.mul_raw(&num, &den);
            r = r.iter().zip(&step).map(|(&x, &s)| sub_mod(x, s, self.pk)).collect();
            digits *= 2;
        }
        let mut powers = Vec::with_capacity(f);
        let mut acc = vec![0u64; f];
        acc[0] = 1 % self.pk;
        for _ in 0..f {
            powers.push(acc.clone());
            acc = self.mul_raw(&acc, &r);
        }
        Ok(powers)
    }

    fn pow_raw(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = vec![0u64; self.f as usize];
        acc[0] = 1 % self.pk;
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(&acc, &b);
            }
            b = self.mul_raw(&b, &b);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for UnramifiedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}^{} / {}^{} mod {:?}", self.p, self.f, self.p, self.prec, self.poly)
    }
}

/// An element of Z_q / p^prec.
#[derive(Clone)]
pub struct Zq {
    ring: Arc<UnramifiedRing>,
    c: Vec<u64>,
}

impl Zq {
    pub fn ring(&self) -> &Arc<UnramifiedRing> {
        &self.ring
    }
    pub fn p(&self) -> u64 {
        self.ring.p
    }
    pub fn prec(&self) -> u32 {
        self.ring.prec
    }
    pub fn degree(&self) -> u32 {
        self.ring.f
    }
    /// Coordinates in the power basis, each in [0, p^prec).
    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn is_unit(&self) -> bool {
        self.c.iter().any(|&x| x % self.ring.p != 0)
    }

    pub fn valuation(&self) -> Option<u32> {
        self.c
            .iter()
            .filter(|&&x| x != 0)
            .map(|&x| {
                let mut v = 0;
                let mut r = x;
                while r % self.ring.p == 0 {
                    r /= self.ring.p;
                    v += 1;
                }
                v
            })
            .min()
    }

    pub fn inv(&self) -> Result<Zq> {
        Ok(Zq { ring: Arc::clone(&self.ring), c: self.ring.inv_raw(&self.c)? })
    }

    pub fn pow(&self, e: u64) -> Zq {
        Zq { ring: Arc::clone(&self.ring), c: self.ring.pow_raw(&self.c, e) }
    }

    /// Multiply by a Z_p scalar.
    pub fn scale(&self, z: &Zp) -> Zq {
        assert_eq!(z.p(), self.ring.p, "mismatched primes");
        let m = self.ring.pk;
        let s = z.residue() % m;
        Zq { ring: Arc::clone(&self.ring), c: self.c.iter().map(|&x| mul_mod(x, s, m)).collect() }
    }

    /// Frobenius: the ring endomorphism lifting x -> x^p.
    pub fn frobenius(&self) -> Zq {
        let r = &self.ring;
        let mut out = vec![0u64; r.f as usize];
        for (ci, pw) in self.c.iter().zip(&r.frob_powers) {
            if *ci == 0 {
                continue;
            }
            for (o, &w) in out.iter_mut().zip(pw) {
                *o = add_mod(*o, mul_mod(*ci, w, r.pk), r.pk);
            }
        }
        Zq { ring: Arc::clone(r), c: out }
    }

    /// Project to Z_p; fails unless all higher coordinates vanish.
    pub fn to_zp(&self) -> Result<Zp> {
        if self.c[1..].iter().any(|&x| x != 0) {
            return Err(Error::NotInPrimeSubring);
        }
        Zp::new(self.ring.p, self.ring.prec, self.c[0] as i128)
    }

    /// Move to another precision of the same level (canonical lift upward).
    pub fn at_precision(&self, ring: &Arc<UnramifiedRing>) -> Zq {
        assert!(ring.p == self.ring.p && ring.poly == self.ring.poly, "mismatched levels");
        Zq { ring: Arc::clone(ring), c: self.c.iter().map(|&x| x % ring.pk).collect() }
    }

    /// Exact division by p^k into the ring `target` of precision prec - k.
    pub fn divide_by_p(&self, k: u32, target: &Arc<UnramifiedRing>) -> Result<Zq> {
        assert_eq!(target.prec + k, self.ring.prec, "target precision must be prec - k");
        let pk = self.ring.p.pow(k);
        if self.c.iter().any(|&x| x % pk != 0) {
            return Err(Error::DivisionNotExact { k });
        }
        Ok(Zq { ring: Arc::clone(target), c: self.c.iter().map(|&x| x / pk).collect() })
    }

    pub fn agrees_mod(&self, other: &Zq, k: u32) -> bool {
        let m = self.ring.p.pow(k.min(self.prec()).min(other.prec()));
        self.c.iter().zip(&other.c).all(|(a, b)| a % m == b % m)
    }

    fn check(&self, o: &Zq) {
        if !Arc::ptr_eq(&self.ring, &o.ring) && !self.ring.same_as(&o.ring) {
            panic!("mismatched rings: {:?} vs {:?}", self.ring, o.ring);
        }
    }
}

impl PartialEq for Zq {
    fn eq(&self, o: &Zq) -> bool {
        self.ring.same_as(&o.ring) && self.c == o.c
    }
}
impl Eq for Zq {}

impl fmt::Debug for Zq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (mod {}^{})", self.c, self.ring.p, self.ring.prec)
    }
}

impl Add for Zq {
    type Output = Zq;
    fn add(self, o: Zq) -> Zq {
        &self + &o
    }
}
impl Sub for Zq {
    type Output = Zq;
    fn sub(self, o: Zq) -> Zq {
        &self - &o
    }
}
impl Mul for Zq {
    type Output = Zq;
    fn mul(self, o: Zq) -> Zq {
        &self * &o
    }
}
impl Neg for Zq {
    type Output = Zq;
    fn neg(self) -> Zq {
        let m = self.ring.pk;
        Zq { c: self.c.iter().map(|&x| sub_mod(0, x, m)).collect(), ring: self.ring }
    }
}

impl<'a> Add<&'a Zq> for &'a Zq {
    type Output = Zq;
    fn add(self, o: &Zq) -> Zq {
        self.check(o);
        let m = self.ring.pk;
        Zq {
            ring: Arc::clone(&self.ring),
            c: self.c.iter().zip(&o.c).map(|(&a, &b)| add_mod(a, b, m)).collect(),
        }
    }
}
impl<'a> Sub<&'a Zq> for &'a Zq {
    type Output = Zq;
    fn sub(self, o: &Zq) -> Zq {
        self.check(o);
        let m = self.ring.pk;
        Zq {
            ring: Arc::clone(&self.ring),
            c: self.c.iter().zip(&o.c).map(|(&a, &b)| sub_mod(a, b, m)).collect(),
        }
    }
}
impl<'a> Mul<&'a Zq> for &'a Zq {
    type Output = Zq;
    fn mul(self, o: &Zq) -> Zq {
        self.check(o);
        Zq { ring: Arc::clone(&self.ring), c: self.ring.mul_raw(&self.c, &o.c) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_is_involution_in_degree_two() {
        let ring = UnramifiedRing::new(3, 2, 5).unwrap();
        let z = ring.element(&[17, 101]);
        assert_eq!(z.frobenius().frobenius(), z);
        let w = ring.element(&[5, 7]);
        assert_eq!((&z * &w).frobenius(), &z.frobenius() * &w.frobenius());
        // Reduces to x -> x^p.
        assert!(z.frobenius().agrees_mod(&z.pow(3), 1));
    }

    #[test]
    fn inverse_round_trip() {
        let ring = UnramifiedRing::new(5, 3, 6).unwrap();
        let z = ring.element(&[5, 1, 12]);
        let zi = z.inv().unwrap();
        assert_eq!(&z * &zi, ring.one());
        assert!(ring.element(&[5, 10, 25]).inv().is_err());
    }

    #[test]
    fn prime_subring_projection() {
        let ring = UnramifiedRing::new(7, 2, 3).unwrap();
        assert_eq!(ring.from_int(9).to_zp().unwrap().residue(), 9);
        assert_eq!(ring.element(&[0, 1]).to_zp(), Err(Error::NotInPrimeSubring));
        assert_eq!(ring.from_int(9).frobenius(), ring.from_int(9));
    }
}
