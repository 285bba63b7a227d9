use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::zp::Zp;
use crate::error::{Error, Result};

/// A reduced rational number `num/den` with `den > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct RationalParam {
    num: i64,
    den: i64,
}

impl RationalParam {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let r = Ratio::new(num, den);
        Ok(RationalParam { num: *r.numer(), den: *r.denom() })
    }

    pub fn integer(n: i64) -> Self {
        RationalParam { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }
    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        Ratio::new_raw(self.num, self.den)
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        RationalParam { num: *r.numer(), den: *r.denom() }
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// True for 0, -1, -2, ...
    pub fn is_nonpositive_integer(&self) -> bool {
        self.den == 1 && self.num <= 0
    }

    /// Whether the value lies in Z_(p), i.e. p does not divide the denominator.
    pub fn is_p_integral(&self, p: u64) -> bool {
        self.den % p as i64 != 0
    }

    /// Image in Z_p / p^prec.
    pub fn embed(&self, p: u64, prec: u32) -> Result<Zp> {
        embed_rational(*self, p, prec)
    }
}

/// Canonical embedding of a p-integral rational into Z_p / p^prec.
pub fn embed_rational(r: RationalParam, p: u64, prec: u32) -> Result<Zp> {
    if !r.is_p_integral(p) {
        return Err(Error::DenominatorDivisibleByP { den: r.den, p });
    }
    let n = Zp::new(p, prec, r.num as i128)?;
    let d = n.like(r.den as i128);
    Ok(n * d.inv()?)
}

impl fmt::Display for RationalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RationalParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse rational {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                RationalParam::new(n, d)
            }
            None => Ok(RationalParam::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl TryFrom<String> for RationalParam {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RationalParam> for String {
    fn from(r: RationalParam) -> String {
        r.to_string()
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator(rs: &[RationalParam]) -> i64 {
    rs.iter().fold(1i64, |acc, r| acc.lcm(&r.den))
}
