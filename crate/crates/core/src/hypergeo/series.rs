//! Truncated power series in t with Z_p coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::arith::{add_mod, checked_modulus, mul_mod, sub_mod};
use crate::padic::Zp;

/// sum_{i <= D} a_i t^i with every a_i known mod p^prec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SeriesRecord", try_from = "SeriesRecord")]
pub struct TruncatedSeries {
    p: u64,
    prec: u32,
    coeffs: Vec<u64>,
}

/// Serialized form: coefficients as decimal residues mod p^prec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub p: u64,
    pub prec: u32,
    #[serde(rename = "D")]
    pub degree: usize,
    pub coeffs: Vec<String>,
}

impl From<TruncatedSeries> for SeriesRecord {
    fn from(s: TruncatedSeries) -> Self {
        SeriesRecord {
            p: s.p,
            prec: s.prec,
            degree: s.degree(),
            coeffs: s.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<SeriesRecord> for TruncatedSeries {
    type Error = Error;
    fn try_from(r: SeriesRecord) -> Result<Self> {
        if r.coeffs.len() != r.degree + 1 {
            return Err(Error::InvalidParameter("coefficient count does not match D".into()));
        }
        let m = checked_modulus(r.p, r.prec)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| match s.parse::<u64>() {
                Ok(v) if v < m => Ok(v),
                _ => Err(Error::InvalidParameter(format!("bad coefficient {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries { p: r.p, prec: r.prec, coeffs })
    }
}

impl TruncatedSeries {
    /// Series from coefficients; the common precision is the least among them.
    pub fn from_coeffs(coeffs: &[Zp]) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::InvalidParameter("empty series".into()))?;
        let prec = coeffs.iter().map(Zp::prec).min().unwrap();
        let p = first.p();
        Ok(TruncatedSeries { p, prec, coeffs: coeffs.iter().map(|c| c.truncate(prec).residue()).collect() })
    }

    /// Residues already reduced mod p^prec.
    pub(crate) fn from_residues(p: u64, prec: u32, coeffs: Vec<u64>) -> Self {
        TruncatedSeries { p, prec, coeffs }
    }

    pub fn from_ints(p: u64, prec: u32, coeffs: &[i128]) -> Result<Self> {
        let m = checked_modulus(p, prec)?;
        let coeffs = coeffs.iter().map(|&c| c.rem_euclid(m as i128) as u64).collect();
        Ok(TruncatedSeries { p, prec, coeffs })
    }

    pub fn zero(p: u64, prec: u32, degree: usize) -> Result<Self> {
        checked_modulus(p, prec)?;
        Ok(TruncatedSeries { p, prec, coeffs: vec![0; degree + 1] })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn prec(&self) -> u32 {
        self.prec
    }
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
    fn modulus(&self) -> u64 {
        self.p.pow(self.prec)
    }

    pub fn coeff(&self, i: usize) -> Zp {
        Zp::new(self.p, self.prec, self.coeffs[i] as i128).expect("valid precision")
    }

    pub fn coeffs(&self) -> Vec<Zp> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn residues(&self) -> &[u64] {
        &self.coeffs
    }

    /// Same series reduced to fewer digits.
    pub fn with_precision(&self, prec: u32) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        let m = self.p.pow(prec);
        TruncatedSeries { p: self.p, prec, coeffs: self.coeffs.iter().map(|c| c % m).collect() }
    }

    /// Keep degrees <= d (pads with zeros when d is larger).
    pub fn resized(&self, d: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(d + 1, 0);
        TruncatedSeries { coeffs, ..*self }
    }

    /// [f]_{<m}: zero the coefficients of index >= m, keeping the degree.
    pub fn truncated(&self, m: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().skip(m) {
            *c = 0;
        }
        TruncatedSeries { coeffs, ..*self }
    }

    fn common(&self, other: &Self) -> (u32, usize) {
        assert_eq!(self.p, other.p, "mismatched primes");
        (self.prec.min(other.prec), self.degree().min(other.degree()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (prec, d) = self.common(other);
        let m = self.p.pow(prec);
        let coeffs = (0..=d).map(|i| add_mod(self.coeffs[i] % m, other.coeffs[i] % m, m)).collect();
        TruncatedSeries { p: self.p, prec, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (prec, d) = self.common(other);
        let m = self.p.pow(prec);
        let coeffs = (0..=d).map(|i| sub_mod(self.coeffs[i] % m, other.coeffs[i] % m, m)).collect();
        TruncatedSeries { p: self.p, prec, coeffs }
    }

    pub fn scale(&self, c: &Zp) -> Self {
        let prec = self.prec.min(c.prec());
        let m = self.p.pow(prec);
        let k = c.residue() % m;
        let coeffs = self.coeffs.iter().map(|&a| mul_mod(a % m, k, m)).collect();
        TruncatedSeries { p: self.p, prec, coeffs }
    }

    /// Product truncated to the smaller degree.
    pub fn mul(&self, other: &Self) -> Self {
        let (prec, d) = self.common(other);
        let m = self.p.pow(prec);
        let mut out = vec![0u64; d + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a % m == 0 {
                continue;
            }
            let a = a % m;
            for (j, &b) in other.coeffs.iter().enumerate().take(d + 1 - i) {
                if b != 0 {
                    out[i + j] = add_mod(out[i + j], mul_mod(a, b % m, m), m);
                }
            }
        }
        TruncatedSeries { p: self.p, prec, coeffs: out }
    }

    /// 1/f for a unit constant term.
    pub fn invert(&self) -> Result<Self> {
        let m = self.modulus();
        let c0 = self.coeff(0);
        if !c0.is_unit() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = c0.inv()?.residue();
        let d = self.degree();
        let mut out = vec![0u64; d + 1];
        out[0] = inv0;
        for n in 1..=d {
            let mut acc = 0u64;
            for k in 1..=n {
                acc = add_mod(acc, mul_mod(self.coeffs[k], out[n - k], m), m);
            }
            out[n] = mul_mod(sub_mod(0, acc, m), inv0, m);
        }
        Ok(TruncatedSeries { coeffs: out, ..*self })
    }

    /// f(c t^p), kept to the same degree.
    pub fn substitute_frobenius(&self, c: &Zp) -> Self {
        let prec = self.prec.min(c.prec());
        let m = self.p.pow(prec);
        let p = self.p as usize;
        let d = self.degree();
        let mut out = vec![0u64; d + 1];
        let mut cn = 1 % m;
        let cr = c.residue() % m;
        for n in 0..=d / p {
            out[n * p] = mul_mod(self.coeffs[n] % m, cn, m);
            cn = mul_mod(cn, cr, m);
        }
        TruncatedSeries { p: self.p, prec, coeffs: out }
    }

    /// sum a_n t^n -> sum (a_n / n) t^n. The constant term must vanish and
    /// each a_n must be divisible by the power of p in n; the result loses
    /// floor(log_p D) digits.
    pub fn integrate0(&self) -> Result<Self> {
        if self.coeffs[0] != 0 {
            return Err(Error::InvalidParameter("integrate0 needs a zero constant term".into()));
        }
        let d = self.degree();
        let mut kmax = 0u32;
        while (self.p as u128).pow(kmax + 1) <= d as u128 {
            kmax += 1;
        }
        if kmax >= self.prec {
            return Err(Error::InvalidPrecision(0));
        }
        let prec = self.prec - kmax;
        let mut out = vec![0u64; d + 1];
        for (n, slot) in out.iter_mut().enumerate().skip(1) {
            let (mut k, mut unit) = (0u32, n as u64);
            while unit % self.p == 0 {
                unit /= self.p;
                k += 1;
            }
            let q = self.coeff(n).divide_by_p(k)?;
            let q = q.truncate(prec).div(&Zp::new(self.p, prec, unit as i128)?)?;
            *slot = q.residue();
        }
        Ok(TruncatedSeries { p: self.p, prec, coeffs: out })
    }

    /// Value at alpha, by Horner's rule.
    pub fn eval(&self, alpha: &Zp) -> Zp {
        assert_eq!(self.p, alpha.p(), "mismatched primes");
        let prec = self.prec.min(alpha.prec());
        let m = self.p.pow(prec);
        let x = alpha.residue() % m;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = add_mod(mul_mod(acc, x, m), c % m, m);
        }
        Zp::new(self.p, prec, acc as i128).expect("valid precision")
    }

    /// First index at which the coefficients differ mod p^k.
    pub fn first_mismatch(&self, other: &Self, k: u32) -> Option<usize> {
        let (_, d) = self.common(other);
        let m = self.p.pow(k.min(self.prec).min(other.prec));
        (0..=d).find(|&i| self.coeffs[i] % m != other.coeffs[i] % m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_one_minus_t() {
        let f = TruncatedSeries::from_ints(5, 3, &[1, -1, 0, 0, 0, 0, 0]).unwrap();
        let g = f.invert().unwrap();
        assert!(g.residues().iter().all(|&c| c == 1));
        let one = f.mul(&g);
        assert_eq!(one.residues(), &[1, 0, 0, 0, 0, 0, 0]);
        let bad = TruncatedSeries::from_ints(5, 3, &[5, 1]).unwrap();
        assert_eq!(bad.invert(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn substitute_geometric() {
        let f = TruncatedSeries::from_ints(3, 2, &[1; 10]).unwrap();
        let one = Zp::one(3, 2).unwrap();
        let g = f.substitute_frobenius(&one);
        let expect: Vec<u64> = (0..10).map(|i| u64::from(i % 3 == 0)).collect();
        assert_eq!(g.residues(), expect.as_slice());
    }

    #[test]
    fn integrate_and_eval() {
        // t + 3 t^3 at p = 3 integrates to t + t^3.
        let f = TruncatedSeries::from_ints(3, 4, &[0, 1, 0, 3]).unwrap();
        let g = f.integrate0().unwrap();
        assert_eq!(g.prec(), 3);
        assert_eq!(g.residues(), &[0, 1, 0, 1]);
        let two = Zp::new(3, 3, 2).unwrap();
        assert_eq!(g.eval(&two).residue(), 10);
        let h = TruncatedSeries::from_ints(3, 4, &[0, 1, 0, 1]).unwrap();
        assert_eq!(h.integrate0(), Err(Error::DivisionNotExact { k: 1 }));
    }

    #[test]
    fn record_round_trip() {
        let f = TruncatedSeries::from_ints(7, 2, &[1, 2, 48]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"p":7,"prec":2,"D":2,"coeffs":["1","2","48"]}"#);
        let back: TruncatedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"p":7,"prec":2,"D":0,"coeffs":["49"]}"#).is_err());
    }

    #[test]
    fn truncation() {
        let f = TruncatedSeries::from_ints(5, 2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(f.truncated(2).residues(), &[1, 2, 0, 0]);
        assert_eq!(f.first_mismatch(&f.truncated(2), 2), Some(2));
        assert_eq!(f.first_mismatch(&f, 2), None);
    }
}
