use padic_hg::curves::{
    count_hg_curve, count_legendre, predicted_count, verify_dwork_unit_root, verify_hg_unit_roots, zeta_numerator,
    HGCurveSpec, LegendreCurve, Verdict,
};
use padic_hg::hypergeo::gauss_mod_p;
use padic_hg::{Error, RationalParam};

use super::Check;

/// Point-count unit root against Dwork's formula for every ordinary a.
/// Returns the checks and the number of supersingular a skipped.
pub fn legendre_unit_roots(ps: &[u64], prec: u32) -> (Vec<Check>, usize) {
    let mut out = Vec::new();
    let mut skipped = 0;
    for &p in ps {
        for a in 2..p as i64 {
            match verify_dwork_unit_root(p, a, prec) {
                Ok(rep) => out.push(Check::new(format!("legendre p={p} a={a}"), rep.matches)),
                Err(Error::NotOrdinary { .. }) => {
                    let c = count_legendre(&LegendreCurve::new(p, a).unwrap()).unwrap();
                    out.push(Check::new(format!("supersingular p={p} a={a}"), c.a_p % p as i64 == 0));
                    skipped += 1;
                }
                Err(e) => out.push(Check::new(format!("legendre p={p} a={a}: {e}"), false)),
            }
        }
    }
    (out, skipped)
}

pub fn hg_unit_root_cases(cases: &[(u64, u64, u64, i64)], prec: u32) -> Vec<Check> {
    cases
        .iter()
        .map(|&(n, m, p, t0)| {
            let name = format!("hg unit roots N={n} M={m} p={p} t0={t0}");
            let spec = HGCurveSpec::new(n, m, p, t0).unwrap();
            match verify_hg_unit_roots(&spec, prec, false) {
                Ok(rep) => Check::new(name, rep.cardinality_match && rep.verdict == Verdict::Match),
                Err(e) => Check::new(format!("{name}: {e}"), false),
            }
        })
        .collect()
}

/// Counts over F_{p^e} for e <= g + 1 agree with P(T) and satisfy the
/// Weil bound |#X - q - 1| <= 2g sqrt(q).
pub fn zeta_consistency(specs: &[(u64, u64, u64, i64)]) -> Vec<Check> {
    let mut out = Vec::new();
    for &(n, m, p, t0) in specs {
        let spec = HGCurveSpec::new(n, m, p, t0).unwrap();
        let g = spec.genus();
        let z = match zeta_numerator(&spec, true) {
            Ok(z) => z,
            Err(e) => {
                out.push(Check::new(format!("zeta {spec:?}: {e}"), false));
                continue;
            }
        };
        for e in 1..=g + 1 {
            let direct = count_hg_curve(&spec, e).unwrap() as i128;
            let q = (p as i128).pow(e);
            let dev = direct - q - 1;
            let weil = dev * dev <= 4 * (g as i128).pow(2) * q;
            out.push(Check::new(format!("count {spec:?} e={e}"), direct == predicted_count(&z, e) && weil));
        }
    }
    out
}

pub fn gauss_truncation_checks(ps: &[u64]) -> Vec<Check> {
    let mut out = Vec::new();
    for &p in ps {
        for a0 in 0..p as i64 {
            for b0 in 0..p as i64 {
                let rep = gauss_mod_p(RationalParam::integer(-a0), RationalParam::integer(-b0), p).unwrap();
                let vanish = (a0 + b0 >= p as i64) == (rep.truncated == 0);
                out.push(Check::new(format!("gauss p={p} a0={a0} b0={b0}"), rep.agree && vanish));
            }
        }
    }
    out
}
