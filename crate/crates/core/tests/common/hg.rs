//! Shared checks for the hypergeometric layer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use padic_hg::hypergeo::{
    congruence_report, dwork_congruence_report, dwork_prime, g_constant, g_tail_exact,
    hg_coeffs_exact, HGParams, Twist,
};
use padic_hg::padic::{Qp, RationalParam, Zp};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{rat, Check};

pub fn grid_params() -> Vec<Vec<RationalParam>> {
    vec![
        vec![rat(1, 2), rat(1, 2)],
        vec![rat(1, 3), rat(2, 3)],
        vec![rat(1, 6), rat(5, 6)],
        vec![rat(1, 4), rat(3, 4)],
        vec![rat(1, 2), rat(1, 2), rat(1, 2)],
    ]
}

/// c = 1 + p*e with e random, known to `digits` digits.
pub fn random_twist(rng: &mut ChaCha8Rng, p: u64, digits: u32) -> Twist {
    let e = rng.gen_range(0..p.pow(digits - 1)) as i128;
    Twist::Padic(Zp::new(p, digits, 1 + p as i128 * e).unwrap())
}

fn report_check(rep: padic_hg::Result<padic_hg::hypergeo::CongruenceReport>, label: String) -> Check {
    match rep {
        Ok(r) => Check::new(format!("{label} first_failure={:?}", r.first_failure), r.pass),
        Err(e) => Check::new(format!("{label} error {e}"), false),
    }
}

/// F [G]_{<p^n} = G [F]_{<p^n} mod p^n over the grid, degree p^n + 25.
pub fn logtype_congruence_grid(rng: &mut ChaCha8Rng, ps: &[u64], ns: &[u32], twists: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for a in grid_params() {
        for &p in ps {
            if a.iter().any(|x| !x.is_p_integral(p)) {
                continue;
            }
            for _ in 0..twists {
                let c = random_twist(rng, p, ns.iter().max().unwrap() + 2);
                let params = HGParams::new(a.clone(), p, c).unwrap();
                for &n in ns {
                    let d = p.pow(n) as usize + 25;
                    out.push(report_check(
                        congruence_report(&params, n, d),
                        format!("logtype a={a:?} p={p} c={c} n={n}"),
                    ));
                }
            }
        }
    }
    out
}

/// p = 2 with c = 3 mod 4, checked modulo 2^(n-1).
pub fn weak_congruence(rng: &mut ChaCha8Rng, ns: &[u32]) -> Vec<Check> {
    let mut out = Vec::new();
    let tuples = [vec![rat(1, 3), rat(2, 3)], vec![rat(1, 3), rat(1, 3)], vec![rat(1, 5), rat(2, 5), rat(3, 5)]];
    for a in tuples {
        let mut cs = vec![Twist::Rational(RationalParam::integer(3)), Twist::Rational(RationalParam::integer(-1))];
        let e = rng.gen_range(0..64i128);
        cs.push(Twist::Padic(Zp::new(2, 8, 3 + 4 * e).unwrap()));
        for c in cs {
            let params = HGParams::new(a.clone(), 2, c).unwrap();
            assert!(params.weak());
            for &n in ns {
                let d = 2usize.pow(n) + 25;
                let rep = congruence_report(&params, n, d);
                let exp_ok = rep.as_ref().map(|r| r.modulus_exponent == n - 1).unwrap_or(false);
                out.push(Check::new(format!("weak exponent a={a:?} c={c} n={n}"), exp_ok));
                out.push(report_check(rep, format!("weak a={a:?} c={c} n={n}")));
            }
        }
    }
    out
}

/// Dwork's congruence in product form over the grid.
pub fn dwork_congruence_grid(ps: &[u64], ns: &[u32]) -> Vec<Check> {
    let mut out = Vec::new();
    for a in grid_params() {
        for &p in ps {
            if a.iter().any(|x| !x.is_p_integral(p)) {
                continue;
            }
            for &n in ns {
                let d = p.pow(n) as usize + 25;
                out.push(report_check(dwork_congruence_report(&a, p, n, d), format!("dwork a={a:?} p={p} n={n}")));
            }
        }
    }
    out
}

fn q(x: &BigRational, p: u64, abs: i32) -> Qp {
    Qp::from_big_rational(x, p, abs).unwrap()
}

fn integral(x: &BigRational, p: u64) -> bool {
    q(x, p, 1).valuation().is_none_or(|v| v >= 0)
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn congruent(x: &BigRational, y: &BigRational, p: u64, n: u32) -> bool {
    let d = x - y;
    q(&d, p, n as i32).valuation().is_none_or(|v| v >= n as i32)
}

fn prime_tuple(a: &[RationalParam], p: u64) -> Vec<RationalParam> {
    a.iter().map(|x| dwork_prime(*x, p).unwrap()).collect()
}

/// Integrality of B_n for rational twists, exact arithmetic.
pub fn g_integrality(ps: &[u64]) -> Vec<Check> {
    let mut out = Vec::new();
    for a in grid_params() {
        for &p in ps {
            if a.iter().any(|x| !x.is_p_integral(p)) {
                continue;
            }
            let pi = p as i64;
            let cs = [big(1), big(1 + pi), big(1 - 2 * pi), BigRational::new(BigInt::from(1), BigInt::from(1 + pi))];
            let d = (p * p) as usize + 2 * p as usize;
            for c in &cs {
                let tail = g_tail_exact(&a, p, c, d).unwrap();
                let bad = (1..=d).find(|&i| !integral(&tail[i], p));
                out.push(Check::new(format!("B_n integral a={a:?} p={p} c={c} bad={bad:?}"), bad.is_none()));
            }
        }
    }
    out
}

/// A_m / A'_{floor(m/p)} is integral and depends on m mod p^n only, mod p^n.
pub fn dwork_ratio_checks(ps: &[u64], ns: &[u32], rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for a in grid_params() {
        for &p in ps {
            if a.iter().any(|x| !x.is_p_integral(p)) {
                continue;
            }
            let nmax = *ns.iter().max().unwrap();
            let top = 3 * p.pow(nmax) as usize;
            let fa = hg_coeffs_exact(&a, top);
            let fb = hg_coeffs_exact(&prime_tuple(&a, p), top / p as usize);
            let ratio = |m: usize| &fa[m] / &fb[m / p as usize];
            for &n in ns {
                let pn = p.pow(n) as usize;
                for _ in 0..samples {
                    let m = rng.gen_range(0..top - pn);
                    let (x, y) = (ratio(m), ratio(m + pn));
                    out.push(Check::new(format!("A/A' integral a={a:?} p={p} m={m}"), integral(&x, p)));
                    out.push(Check::new(
                        format!("A/A' periodic a={a:?} p={p} n={n} m={m}"),
                        congruent(&x, &y, p, n),
                    ));
                }
            }
        }
    }
    out
}

/// The ratios A'_{mp^(n-1)}/A_{mp^n} and B_k/A_k against B_0 (c = 1).
pub fn b0_congruence_checks(ps: &[u64], ns: &[u32], ms: &[u64]) -> Vec<Check> {
    let mut out = Vec::new();
    for a in grid_params() {
        for &p in ps {
            if a.iter().any(|x| !x.is_p_integral(p)) {
                continue;
            }
            let nmax = *ns.iter().max().unwrap();
            let mmax = *ms.iter().max().unwrap();
            let top = (mmax * p.pow(nmax)) as usize + p.pow(nmax) as usize;
            let params = HGParams::untwisted(a.clone(), p).unwrap();
            let fa = hg_coeffs_exact(&a, top);
            let fb = hg_coeffs_exact(params.primed().unwrap().a(), top / p as usize);
            let b = g_tail_exact(&a, p, &BigRational::one(), top).unwrap();
            let b0 = g_constant(&params, 2 * nmax).unwrap();
            for &n in ns {
                for &m in ms {
                    let k = (m * p.pow(n)) as usize;
                    let r = &fb[k / p as usize] / &fa[k];
                    let lhs = q(&r, p, 2 * n as i32);
                    let rhs = b0.truncate(2 * n).like(1) - b0.truncate(2 * n) * b0.truncate(2 * n).like(k as i128);
                    let ok = lhs.valuation() == Some(0)
                        && lhs.to_zp().map(|z| z.agrees_mod(&rhs, 2 * n)).unwrap_or(false);
                    out.push(Check::new(format!("A'/A = 1 - mp^n B0 a={a:?} p={p} n={n} m={m}"), ok));
                    if m % p != 0 {
                        let ba = q(&(&b[k] / &fa[k]), p, n as i32);
                        let ok = ba.to_zp().map(|z| z.agrees_mod(&b0, n)).unwrap_or(false);
                        out.push(Check::new(format!("B/A = B0 a={a:?} p={p} n={n} m={m}"), ok));
                    }
                }
            }
        }
    }
    out
}

/// m = m' mod p^n implies B_m/A_m = B_m'/A_m' mod p^n (c = 1).
pub fn ba_periodicity(ps: &[u64], ns: &[u32], rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for a in grid_params() {
        for &p in ps {
            if a.iter().any(|x| !x.is_p_integral(p)) {
                continue;
            }
            let nmax = *ns.iter().max().unwrap();
            let top = 3 * p.pow(nmax) as usize;
            let fa = hg_coeffs_exact(&a, top);
            let b = g_tail_exact(&a, p, &BigRational::one(), top).unwrap();
            for &n in ns {
                let pn = p.pow(n) as usize;
                for _ in 0..samples {
                    let m = rng.gen_range(1..top - pn);
                    let x = &b[m] / &fa[m];
                    let y = &b[m + pn] / &fa[m + pn];
                    let ok = integral(&x, p) && congruent(&x, &y, p, n);
                    out.push(Check::new(format!("B/A periodic a={a:?} p={p} n={n} m={m}"), ok));
                }
            }
        }
    }
    out
}

/// prod_{1<=i<=n, p not | alpha+i-1} (alpha + i - 1), exactly.
pub fn braces(alpha: &BigRational, n: usize, p: u64) -> BigRational {
    let mut acc = BigRational::one();
    for i in 1..=n {
        let x = alpha + big(i as i64 - 1);
        if !integral(&(&x / big(p as i64)), p) {
            acc *= x;
        }
    }
    acc
}

/// The factorisation of (a)_m/m! against (a')_{floor(m/p)}/floor(m/p)!.
pub fn pochhammer_factorisation(p: u64, params: &[RationalParam], mmax: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for &a in params {
        let ap = dwork_prime(a, p).unwrap();
        let fa = hg_coeffs_exact(&[a], mmax);
        let fb = hg_coeffs_exact(&[ap], mmax / p as usize);
        let ar = BigRational::new(a.num().into(), a.den().into());
        // a = -l mod p
        let l = {
            let z = a.embed(p, 1).unwrap().residue();
            (p - z) % p
        };
        let one = big(1);
        for m in 0..=mmax {
            let lhs = &fa[m] / &fb[m / p as usize];
            let base = braces(&ar, m, p) / braces(&one, m, p);
            let unit = q(&base, p, 1).valuation() == Some(0);
            let rhs = if (m as u64 % p) <= l {
                base
            } else {
                (&ar + big(l as i64) + big(p as i64 * (m / p as usize) as i64)) * base
            };
            out.push(Check::new(format!("pochhammer p={p} a={a} m={m}"), lhs == rhs && unit));
        }
    }
    out
}
