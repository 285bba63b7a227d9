use thiserror::Error;

/// Errors raised by p-adic arithmetic, special functions and the verification
/// routines. Display strings name the violated precondition so front ends can
/// print them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("precision must be at least 1 (got {0})")]
    InvalidPrecision(u32),
    #[error("p^prec = {p}^{prec} exceeds the supported modulus bound 2^62")]
    PrecisionTooLarge { p: u64, prec: u32 },
    #[error("denominator {den} is divisible by p = {p}")]
    DenominatorDivisibleByP { den: i64, p: u64 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("element is not a unit (p divides it)")]
    NotAUnit,
    #[error("p = {p} divides N = {n}")]
    PDividesN { p: u64, n: u64 },
    #[error("argument is congruent to 1 mod p")]
    XCongruentOne,
    #[error("L_p(r, omega^(1-r)) is undefined at r = 1")]
    RIsOne,
    #[error("no N <= {bound} prime to p makes 1 - N^(1-r) a unit")]
    NoValidN { bound: u64 },
    #[error("exact division by p^{k} failed: value is not divisible")]
    DivisionNotExact { k: u32 },
    #[error("evaluation point outside the convergence domain: h(alpha) = 0 mod p")]
    OutsideDomain,
    #[error("series has a non-unit constant term")]
    NonUnitConstantTerm,
    #[error("hypergeometric parameter {0} is a non-positive integer")]
    NonPositiveIntegerParam(String),
    #[error("twist c must satisfy c = 1 mod p ({0})")]
    InvalidTwist(String),
    #[error("curve is not ordinary at p = {p} (p divides the middle coefficient)")]
    NotOrdinary { p: u64 },
    #[error("curve is singular at p = {p}")]
    SingularReduction { p: u64 },
    #[error("unit-root verification needs N | p-1 and M | p-1 (N = {n}, M = {m}, p = {p})")]
    NotImplementedGeneralS { n: u64, m: u64, p: u64 },
    #[error("zeta reconstruction is inconsistent with the count over F_(p^{e})")]
    Inconsistent { e: u32 },
    #[error("value does not lie in Z_p: non-prime-subring coordinates are nonzero")]
    NotInPrimeSubring,
    #[error("mismatched rings: {0}")]
    RingMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
