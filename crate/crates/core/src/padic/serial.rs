use serde::{Deserialize, Serialize};

use super::zp::Zp;
use super::zq::Zq;

/// Portable record of a scalar: coordinates as base-10 strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRecord {
    pub p: u64,
    pub f: u32,
    pub prec: u32,
    pub coeffs: Vec<String>,
}

impl From<&Zp> for ScalarRecord {
    fn from(z: &Zp) -> Self {
        ScalarRecord { p: z.p(), f: 1, prec: z.prec(), coeffs: vec![z.residue().to_string()] }
    }
}

impl From<Zp> for ScalarRecord {
    fn from(z: Zp) -> Self {
        (&z).into()
    }
}

impl From<&Zq> for ScalarRecord {
    fn from(z: &Zq) -> Self {
        ScalarRecord {
            p: z.p(),
            f: z.degree(),
            prec: z.prec(),
            coeffs: z.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl ScalarRecord {
    /// Rebuild a Z_p value (f must be 1).
    pub fn to_zp(&self) -> crate::Result<Zp> {
        if self.f != 1 || self.coeffs.len() != 1 {
            return Err(crate::Error::NotInPrimeSubring);
        }
        let v: i128 = self.coeffs[0]
            .parse()
            .map_err(|_| crate::Error::InvalidParameter(format!("bad digits {:?}", self.coeffs[0])))?;
        Zp::new(self.p, self.prec, v)
    }
}

impl TryFrom<ScalarRecord> for Zp {
    type Error = crate::Error;
    fn try_from(r: ScalarRecord) -> crate::Result<Zp> {
        r.to_zp()
    }
}
