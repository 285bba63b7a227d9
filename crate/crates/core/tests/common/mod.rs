#![allow(dead_code)]

pub mod curves;
pub mod hg;

use padic_hg::padic::{
    log_p_twisted, roots_of_unity, roots_of_unity_in, teichmuller, PadicRing, Qp, RationalParam,
    UnramifiedRing, Zp,
};
use padic_hg::special::kubota::auxiliary_ns;
use padic_hg::special::polylog::polylog_level;
use padic_hg::special::{
    euler_gamma, kubota_leopoldt_limit, kubota_leopoldt_with_n, polygamma, polylog,
    polylog_at_roots, psi_tilde, psi_tilde_rational, volkenborn_psi, PolygammaArg,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Outcome of one identity check.
pub struct Check {
    pub name: String,
    pub ok: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool) -> Self {
        Check { name: name.into(), ok }
    }
}

pub fn rat(n: i64, d: i64) -> RationalParam {
    RationalParam::new(n, d).unwrap()
}

pub fn random_zp(rng: &mut ChaCha8Rng, p: u64, prec: u32) -> Zp {
    let m = p.pow(prec);
    Zp::new(p, prec, rng.gen_range(0..m) as i128).unwrap()
}

/// A random unit x with x != 1 mod p.
pub fn random_polylog_arg(rng: &mut ChaCha8Rng, p: u64, prec: u32) -> Zp {
    loop {
        let x = random_zp(rng, p, prec);
        if x.is_unit() && x.reduce_mod_p() != 1 {
            return x;
        }
    }
}

fn qp_agree(a: &Qp, b: &Qp, k: i32) -> bool {
    a.agrees_mod(b, k)
}

/// Reflection ln_r(x) = (-1)^(r+1) ln_r(1/x).
pub fn reflection(p: u64, k: u32, g: u32, rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for r in 0..=3i64 {
        for i in 0..samples {
            let x = if i % 2 == 0 {
                random_polylog_arg(rng, p, k)
            } else {
                teichmuller(&random_polylog_arg(rng, p, k)).unwrap()
            };
            let lhs = polylog(r, &x).unwrap();
            let rhs = polylog(r, &x.inv().unwrap()).unwrap();
            let rhs = if r % 2 == 0 { -rhs } else { rhs };
            out.push(Check::new(format!("reflection p={p} r={r} x={}", x.residue()), lhs.agrees_mod(&rhs, k - g)));
        }
    }
    out
}

/// Distribution sum_{zeta in mu_N} ln_r(zeta x) = N^(1-r) ln_r(x^N).
///
/// x is sampled in an unramified level large enough that x^N != 1 mod p is
/// possible (over F_3 every unit is a square root of 1, for instance).
pub fn distribution(p: u64, k: u32, g: u32, rng: &mut ChaCha8Rng, ns: &[u64]) -> Vec<Check> {
    let mut out = Vec::new();
    for &n in ns {
        if n % p == 0 {
            continue;
        }
        let f0 = padic_hg::padic::arith::multiplicative_order(p, n);
        let mut f = f0;
        while (p as u128).pow(f) - 1 <= n as u128 {
            f += f0;
        }
        let ring = UnramifiedRing::new(p, f, k).unwrap();
        let roots = roots_of_unity_in(n, &ring).unwrap();
        let one = ring.one();
        for r in 0..=3i64 {
            let x = loop {
                let idx = rng.gen_range(1..ring.q());
                let lift: Vec<i128> = (0..f).map(|_| rng.gen_range(0..p.pow(k)) as i128 * p as i128).collect();
                let x = &ring.from_index(idx) + &ring.element(&lift);
                if x.is_unit() && !(&x.pow(n) - &one).valuation().map_or(true, |v| v >= 1) {
                    break x;
                }
            };
            let mut lhs = ring.zero();
            for z in &roots.roots {
                lhs = &lhs + &polylog(r, &(z * &x)).unwrap();
            }
            let scale = Zp::new(p, k, n as i128).unwrap().pow_i64(1 - r).unwrap();
            let rhs = polylog(r, &x.pow(n)).unwrap().scale(&scale);
            out.push(Check::new(format!("distribution p={p} N={n} r={r}"), lhs.agrees_mod(&rhs, k - g)));
        }
    }
    out
}

/// psi~(0) = psi~(1) = 0, reflection, and the difference equation, at
/// rational and random p-adic points.
pub fn psi_basic(p: u64, k: u32, g: u32, rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let target = k - g;
    let digits = k + 3;
    for r in 0..=3i64 {
        let z0 = psi_tilde(r, &PolygammaArg::Rational(rat(0, 1)), p, k).unwrap();
        let z1 = psi_tilde(r, &PolygammaArg::Rational(rat(1, 1)), p, k).unwrap();
        out.push(Check::new(format!("psi~({r})(0)=psi~(1)=0 p={p}"), z0.is_zero() && z1.is_zero()));
        let g0 = polygamma(r, &PolygammaArg::Rational(rat(0, 1)), p, k).unwrap();
        let g1 = polygamma(r, &PolygammaArg::Rational(rat(1, 1)), p, k).unwrap();
        out.push(Check::new(format!("psi({r})(0)=psi(1) p={p}"), g0.agrees_mod(&g1, target as i32)));
        for i in 0..samples {
            let z = if i % 2 == 0 {
                random_zp(rng, p, digits)
            } else {
                let den = [2i64, 3, 4, 5, 6, 7, 8, 9, 10, 11][i % 10];
                let den = if den as u64 % p == 0 { den + 1 } else { den };
                rat(rng.gen_range(-20..20), den).embed(p, digits).unwrap()
            };
            let one = z.like(1);
            let a = psi_tilde(r, &PolygammaArg::Padic(z), p, k).unwrap();
            let b = psi_tilde(r, &PolygammaArg::Padic(one - z), p, k).unwrap();
            let b = if r % 2 == 0 { b } else { -b };
            out.push(Check::new(format!("psi~ reflection p={p} r={r}"), a.agrees_mod(&b, target)));
            let shifted = psi_tilde(r, &PolygammaArg::Padic(z + one), p, k).unwrap();
            let expect = if z.is_unit() { z.truncate(k).pow_i64(-r - 1).unwrap() } else { z.like(0) };
            out.push(Check::new(
                format!("psi~ difference p={p} r={r}"),
                (shifted - a).agrees_mod(&expect, target),
            ));
            let pa = polygamma(r, &PolygammaArg::Padic(z), p, k).unwrap();
            let pb = polygamma(r, &PolygammaArg::Padic(z + one), p, k).unwrap();
            out.push(Check::new(
                format!("psi difference p={p} r={r}"),
                (pb - pa).agrees_mod(&Qp::from_zp(expect), target as i32),
            ));
        }
    }
    out
}

/// The roots-of-unity formula for psi~(n/N) against the limit definition.
pub fn psi_rational_routes(p: u64, k: u32, g: u32, max_n: u64, rs: &[i64]) -> Vec<Check> {
    let mut out = Vec::new();
    for big_n in 1..=max_n {
        if big_n % p == 0 {
            continue;
        }
        for &r in rs {
            for n in 0..big_n {
                let a = psi_tilde_rational(r, n, big_n, p, k).unwrap();
                let b = psi_tilde(r, &PolygammaArg::Rational(rat(n as i64, big_n as i64)), p, k).unwrap();
                out.push(Check::new(format!("psi~ roots route p={p} r={r} {n}/{big_n}"), a.agrees_mod(&b, k - g)));
            }
        }
    }
    out
}

/// psi^(r)(1/2) = (1 - 2^(r+1)) L_p(1+r, omega^-r) for even r >= 2.
pub fn psi_half(p: u64, k: u32, g: u32) -> Vec<Check> {
    let mut out = Vec::new();
    if p == 2 {
        return out;
    }
    for r in [2i64, 4] {
        let lhs = polygamma(r, &PolygammaArg::Rational(rat(1, 2)), p, k).unwrap();
        let l = padic_hg::special::kubota_leopoldt(1 + r, p, k).unwrap();
        let c = Qp::from_zp(Zp::new(p, k + 2, 1 - (1i128 << (r + 1))).unwrap());
        out.push(Check::new(format!("psi({r})(1/2) p={p}"), lhs.agrees_mod(&(c * l), (k - g) as i32)));
    }
    out
}

/// Multiplication formulas for psi_p.
pub fn multiplication(p: u64, k: u32, g: u32, rng: &mut ChaCha8Rng, ms: &[u64]) -> Vec<Check> {
    let mut out = Vec::new();
    let digits = k + 3;
    for &m in ms {
        if m % p == 0 {
            continue;
        }
        for r in 0..=2i64 {
            let z = random_zp(rng, p, digits);
            let mq = z.like(m as i128);
            let lhs = polygamma(r, &PolygammaArg::Padic(z * mq), p, k).unwrap();
            let mut sum = Qp::zero(p, 2 * k as i32).unwrap();
            let minv = mq.inv().unwrap();
            for i in 0..m {
                let zi = z + z.like(i as i128) * minv;
                sum = sum + polygamma(r, &PolygammaArg::Padic(zi), p, k).unwrap();
            }
            let ok = if r == 0 {
                let lg = log_p_twisted(&Zp::new(p, k + 1, m as i128).unwrap()).unwrap();
                let rhs = sum * Qp::from_zp(minv);
                (lhs - Qp::from_zp(lg)).agrees_mod(&rhs, (k - g) as i32)
            } else {
                let rhs = sum * Qp::from_zp(minv.pow(r as u64 + 1));
                lhs.agrees_mod(&rhs, (k - g) as i32)
            };
            out.push(Check::new(format!("multiplication p={p} m={m} r={r}"), ok));
        }
    }
    out
}

/// Volkenborn integrals against the definitional polygamma.
pub fn volkenborn(p: u64, k: u32, g: u32, rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let digits = padic_hg::special::volkenborn::volkenborn_input_digits(3, p, k).max(
        padic_hg::special::volkenborn::volkenborn_input_digits(0, p, k),
    );
    for r in [0i64, 1, 2, 3] {
        let zero = PolygammaArg::Rational(rat(0, 1));
        let v0 = volkenborn_psi(r, &zero, p, k).unwrap();
        let expect = if r == 0 {
            -Qp::from_zp(euler_gamma(p, k).unwrap())
        } else {
            -padic_hg::special::kubota_leopoldt(1 + r, p, k).unwrap()
        };
        out.push(Check::new(format!("volkenborn at 0 p={p} r={r}"), v0.agrees_mod(&expect, (k - g) as i32)));
        for _ in 0..samples {
            let z = PolygammaArg::Padic(random_zp(rng, p, digits));
            let a = volkenborn_psi(r, &z, p, k).unwrap();
            let b = polygamma(r, &z, p, k).unwrap();
            out.push(Check::new(format!("volkenborn p={p} r={r}"), a.agrees_mod(&b, (k - g) as i32)));
        }
    }
    out
}

/// Two-N consistency of the polylogarithm formula for L_p and agreement
/// with the Kubota–Leopoldt limit sum.
pub fn kubota_consistency(p: u64, k: u32, g: u32, rs: &[i64]) -> Vec<Check> {
    let mut out = Vec::new();
    for &r in rs {
        let ns = auxiliary_ns(r, p).unwrap();
        let a = kubota_leopoldt_with_n(r, ns[0].0, p, k).unwrap();
        let b = kubota_leopoldt_with_n(r, ns[1].0, p, k).unwrap();
        out.push(Check::new(format!("L_p two-N p={p} r={r} N={},{}", ns[0].0, ns[1].0), a.agrees_mod(&b, (k - g) as i32)));
        let level = k + 2;
        let lim = kubota_leopoldt_limit(r, p, level, k).unwrap();
        out.push(Check::new(format!("L_p limit p={p} r={r}"), a.agrees_mod(&lim, (k - g) as i32)));
    }
    out
}

/// N^r sum_{nu^N = eps} nu^-n ln_{r+1}(nu) against its level-s limit sum.
pub fn roots_sum_identity(p: u64, s: u32, g: u32, pairs: &[(u64, u64)], rs: &[i64]) -> Vec<Check> {
    let mut out = Vec::new();
    for &(m, big_n) in pairs {
        if m % p == 0 || big_n % p == 0 {
            continue;
        }
        let mn = m * big_n;
        let all = roots_of_unity(mn, p, s).unwrap();
        let ring = &all.ring;
        for &r in rs {
            let vals = polylog_at_roots(r + 1, &all, polylog_level(p, s)).unwrap();
            for j in 1..m {
                // eps = zeta^(N j), a primitive-or-not m-th root of unity != 1.
                let eps_idx = (big_n * j) as usize;
                let eps = &all.roots[eps_idx];
                for n in 0..big_n {
                    let mut lhs = ring.zero();
                    for i in 0..big_n {
                        let nu_idx = ((j + m * i) % mn) as usize;
                        let nu_inv_n = &all.roots[(mn as usize - (nu_idx * n as usize) % mn as usize) % mn as usize];
                        lhs = &lhs + &(nu_inv_n * &vals[nu_idx - 1]);
                    }
                    let nz = Zp::new(p, s, big_n as i128).unwrap();
                    lhs = lhs.scale(&nz.pow_i64(r).unwrap());
                    // Limit side grouped by k mod m.
                    let frac = Zp::new(p, s, n as i128).unwrap() * nz.inv().unwrap();
                    let mut classes = vec![Zp::new(p, s, 0).unwrap(); m as usize];
                    let ps = p.pow(s);
                    for kk in 0..ps {
                        let x = frac + frac.like(kk as i128);
                        if !x.is_unit() {
                            continue;
                        }
                        let t = x.pow_i64(-(r + 1)).unwrap();
                        classes[(kk % m) as usize] += t;
                    }
                    let mut rhs = ring.zero();
                    let mut e_pow = ring.one();
                    for c in &classes {
                        rhs = &rhs + &e_pow.scale(c);
                        e_pow = &e_pow * eps;
                    }
                    let e_ps = eps.pow(ps);
                    rhs = &rhs * &(&ring.one() - &e_ps).inv().unwrap();
                    out.push(Check::new(
                        format!("roots sum p={p} m={m} N={big_n} r={r} n={n} j={j}"),
                        lhs.agrees_mod(&rhs, s - g),
                    ));
                }
            }
        }
    }
    out
}

pub fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.ok)
}

pub fn failures(checks: &[Check]) -> Vec<String> {
    checks.iter().filter(|c| !c.ok).map(|c| c.name.clone()).collect()
}

pub fn zp_agree(a: &Zp, b: &Zp, k: u32) -> bool {
    a.agrees_mod(b, k)
}

pub fn ring_unit<R: PadicRing>(x: &R) -> bool {
    x.is_unit()
}

pub fn qp_close(a: &Qp, b: &Qp, k: i32) -> bool {
    qp_agree(a, b, k)
}
