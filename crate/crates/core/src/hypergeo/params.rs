//! Hypergeometric parameters, Dwork primes and Frobenius twists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::arith::{inv_mod, is_prime};
use crate::padic::{RationalParam, Zp};

/// a' = (a + l)/p for the unique l in {0..p-1} with a + l = 0 mod p.
pub fn dwork_prime(a: RationalParam, p: u64) -> Result<RationalParam> {
    if !a.is_p_integral(p) {
        return Err(Error::DenominatorDivisibleByP { den: a.den(), p });
    }
    let pi = p as i128;
    let (n, d) = (a.num() as i128, a.den() as i128);
    let d_inv = inv_mod(d.rem_euclid(pi) as u64, p).expect("denominator prime to p") as i128;
    let l = (-n * d_inv).rem_euclid(pi);
    let num = n + l * d;
    debug_assert_eq!(num % pi, 0);
    let num = i64::try_from(num / pi).map_err(|_| Error::InvalidParameter("overflow".into()))?;
    RationalParam::new(num, a.den())
}

/// The sequence a, a', a'', ... up to the first repetition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DworkOrbit<T> {
    /// Distinct iterates a^(0), ..., a^(len-1).
    pub members: Vec<T>,
    /// Index of the first member of the cycle.
    pub cycle_start: usize,
    pub cycle_len: usize,
}

impl<T> DworkOrbit<T> {
    /// The iterates that lie on the cycle.
    pub fn cycle(&self) -> &[T] {
        &self.members[self.cycle_start..]
    }
}

fn orbit_of<T: Clone + PartialEq>(x: T, step: impl Fn(&T) -> Result<T>) -> Result<DworkOrbit<T>> {
    let mut members = vec![x];
    loop {
        let next = step(members.last().unwrap())?;
        if let Some(i) = members.iter().position(|m| *m == next) {
            let cycle_len = members.len() - i;
            return Ok(DworkOrbit { members, cycle_start: i, cycle_len });
        }
        members.push(next);
    }
}

/// Orbit of a single parameter under the Dwork prime.
pub fn dwork_orbit(a: RationalParam, p: u64) -> Result<DworkOrbit<RationalParam>> {
    orbit_of(a, |x| dwork_prime(*x, p))
}

/// Orbit of a parameter tuple, primed componentwise.
pub fn dwork_orbit_tuple(a: &[RationalParam], p: u64) -> Result<DworkOrbit<Vec<RationalParam>>> {
    orbit_of(a.to_vec(), |x| dwork_prime_tuple(x, p))
}

pub fn dwork_prime_tuple(a: &[RationalParam], p: u64) -> Result<Vec<RationalParam>> {
    a.iter().map(|x| dwork_prime(*x, p)).collect()
}

/// Checks that every parameter lies in Z_(p) and outside Z_{<=0}.
pub fn validate_params(a: &[RationalParam], p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a.is_empty() {
        return Err(Error::InvalidParameter("empty parameter list".into()));
    }
    for x in a {
        if !x.is_p_integral(p) {
            return Err(Error::DenominatorDivisibleByP { den: x.den(), p });
        }
        if x.is_nonpositive_integer() {
            return Err(Error::NonPositiveIntegerParam(x.to_string()));
        }
    }
    Ok(())
}

/// The constant c of the Frobenius t -> c t^p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Twist {
    Rational(RationalParam),
    /// alpha^(1-p) for a rational alpha.
    PowerOneMinusP(RationalParam),
    Padic(Zp),
}

impl Twist {
    pub fn one() -> Self {
        Twist::Rational(RationalParam::integer(1))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Twist::Rational(r) if *r == RationalParam::integer(1))
    }

    /// Number of digits the twist is known to; `None` when exact.
    pub fn known_digits(&self) -> Option<u32> {
        match self {
            Twist::Padic(z) => Some(z.prec()),
            _ => None,
        }
    }

    /// Value mod p^prec (fewer digits for a p-adic twist known to less).
    pub fn value(&self, p: u64, prec: u32) -> Result<Zp> {
        match self {
            Twist::Rational(r) => r.embed(p, prec),
            Twist::PowerOneMinusP(alpha) => {
                if alpha.num() % p as i64 == 0 {
                    return Err(Error::InvalidTwist(format!("{alpha} is not a unit")));
                }
                Ok(alpha.embed(p, prec)?.inv()?.pow(p - 1))
            }
            Twist::Padic(z) => {
                if z.p() != p {
                    return Err(Error::InvalidTwist(format!("twist is {}-adic", z.p())));
                }
                Ok(z.truncate(prec))
            }
        }
    }

    /// Checks c = 1 mod p. Returns true when p = 2 and c = 3 mod 4, the case
    /// in which the congruences lose one digit.
    pub fn check(&self, p: u64) -> Result<bool> {
        let c = self.value(p, 2)?;
        if c.reduce_mod_p() != 1 {
            return Err(Error::InvalidTwist(format!("{self} is {} mod {p}", c.reduce_mod_p())));
        }
        Ok(p == 2 && (c.prec() < 2 || c.residue() % 4 == 3))
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Rational(r) => write!(f, "{r}"),
            Twist::PowerOneMinusP(a) => write!(f, "{a}^{{1-p}}"),
            Twist::Padic(z) => write!(f, "{z}"),
        }
    }
}

/// Accepts a rational ("5/4") or the sugar "a^{1-p}" / "a^(1-p)".
impl FromStr for Twist {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some((base, exp)) = s.split_once('^') {
            let exp = exp.trim_start_matches(['{', '(']).trim_end_matches(['}', ')']);
            if exp != "1-p" {
                return Err(Error::InvalidTwist(format!("unsupported exponent {exp:?}")));
            }
            let base = base.trim_start_matches('(').trim_end_matches(')');
            return Ok(Twist::PowerOneMinusP(base.parse()?));
        }
        Ok(Twist::Rational(s.parse()?))
    }
}

/// A validated parameter tuple with its twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HGParams {
    a: Vec<RationalParam>,
    p: u64,
    c: Twist,
    weak: bool,
}

impl HGParams {
    pub fn new(a: Vec<RationalParam>, p: u64, c: Twist) -> Result<Self> {
        validate_params(&a, p)?;
        let weak = c.check(p)?;
        Ok(HGParams { a, p, c, weak })
    }

    /// Parameters with the untwisted Frobenius t -> t^p.
    pub fn untwisted(a: Vec<RationalParam>, p: u64) -> Result<Self> {
        Self::new(a, p, Twist::one())
    }

    pub fn a(&self) -> &[RationalParam] {
        &self.a
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn twist(&self) -> &Twist {
        &self.c
    }

    /// p = 2 with c = 3 mod 4: congruences hold one digit lower.
    pub fn weak(&self) -> bool {
        self.weak
    }

    /// Digits lost in the congruences (1 in the weak case).
    pub fn congruence_loss(&self) -> u32 {
        u32::from(self.weak)
    }

    /// The Dwork-primed tuple with the same twist.
    pub fn primed(&self) -> Result<Self> {
        Ok(HGParams { a: dwork_prime_tuple(&self.a, self.p)?, ..self.clone() })
    }
}
