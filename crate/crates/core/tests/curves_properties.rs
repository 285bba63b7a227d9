mod common;

use common::curves::{gauss_truncation_checks, hg_unit_root_cases, legendre_unit_roots, zeta_consistency};
use common::{rat, Check};
use padic_hg::curves::{
    conjecture_lhs, count_hg_curve, nonvanishing, unit_roots, verify_hg_unit_roots, zeta_numerator, Family,
    HGCurveSpec, Verdict,
};
use padic_hg::{Error, RationalParam};
use proptest::prelude::*;

fn assert_all(checks: &[Check]) {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
}

#[test]
fn legendre_unit_root_formula() {
    let (checks, _) = legendre_unit_roots(&[5, 7, 11, 13], 5);
    assert_all(&checks);
}

#[test]
fn hg_unit_root_multisets() {
    assert_all(&hg_unit_root_cases(&[(2, 3, 7, 3), (2, 3, 7, 5), (2, 4, 5, 2), (3, 3, 7, 2)], 4));
}

#[test]
fn counts_determined_by_zeta_numerator() {
    assert_all(&zeta_consistency(&[(2, 2, 5, 2), (2, 2, 7, 3), (2, 3, 7, 3), (2, 4, 5, 2), (3, 3, 7, 2), (2, 3, 13, 5)]));
}

#[test]
fn gauss_truncation_formula() {
    assert_all(&gauss_truncation_checks(&[5, 7, 11]));
}

#[test]
fn genus_one_fibers_share_the_product_conic_count() {
    for p in [5u64, 7, 11] {
        for t in 2..p as i64 {
            let spec = HGCurveSpec::new(2, 2, p, t).unwrap();
            let direct = count_hg_curve(&spec, 1).unwrap();
            let family = Family::ProductConic.point_count(RationalParam::integer(t), p).unwrap();
            assert_eq!(direct, family, "p={p} t={t}");
        }
    }
}

#[test]
fn ordinary_fibers_have_g_unit_roots() {
    for (n, m, p, t0) in [(2, 3, 7, 3), (2, 3, 7, 5), (3, 3, 7, 2)] {
        let z = zeta_numerator(&HGCurveSpec::new(n, m, p, t0).unwrap(), false).unwrap();
        let ur = unit_roots(&z, 6).unwrap();
        assert_eq!(ur.count(), z.genus as usize);
        assert!(ur.factor.iter().all(|c| c.prec() == 6));
    }
}

#[test]
fn non_ordinary_fiber_compares_the_unit_part() {
    let rep = verify_hg_unit_roots(&HGCurveSpec::new(2, 4, 5, 2).unwrap(), 4, false).unwrap();
    assert!(!rep.ordinary);
    assert_eq!(rep.series_values.len(), 1);
    assert_eq!(rep.verdict, Verdict::Match);
}

#[test]
fn conjecture_values_are_stable() {
    let cases = [
        (Family::Legendre, rat(4, 1), 11),
        (Family::Legendre, rat(-1, 1), 13),
        (Family::Sextic, rat(1, 2), 7),
        (Family::Cubic, rat(1, 6), 7),
        (Family::Quartic, rat(1, 2), 5),
        (Family::ProductConic, rat(2, 1), 7),
        (Family::Fermat33, rat(1, 1), 7),
        (Family::Fermat24, rat(1, 1), 5),
        (Family::Fermat24Star, rat(1, 1), 5),
    ];
    for (family, a, p) in cases {
        match (conjecture_lhs(family, a, p, 4), conjecture_lhs(family, a, p, 5)) {
            (Ok(lo), Ok(hi)) => assert!(lo.lhs.agrees_mod(&hi.lhs, 4), "{family} a={a} p={p}"),
            (Err(e), _) | (_, Err(e)) => assert!(
                matches!(e, Error::NotOrdinary { .. } | Error::OutsideDomain),
                "{family} a={a} p={p}: {e}"
            ),
        }
    }
}

#[test]
fn supersingular_family_member_is_rejected() {
    let r = conjecture_lhs(Family::Legendre, rat(4, 1), 7, 6);
    assert!(matches!(r, Err(Error::NotOrdinary { p: 7 })));
}

#[test]
fn fermat_nonvanishing() {
    for (n, m, p) in [(3, 3, 7), (2, 4, 5), (4, 4, 5)] {
        let rep = nonvanishing(n, m, p, 3).unwrap();
        assert!(rep.divisibility);
        assert!(!rep.entries.is_empty());
        for e in &rep.entries {
            assert!(e.orbit_gauss_nonzero, "{n} {m} {p} {e:?}");
            assert_eq!(e.values.len(), 3);
        }
        println!("{rep:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn hg_counts_obey_weil(n in 2u64..4, m in 2u64..4, pi in 0usize..4, t in 2i64..100) {
        let p = [5u64, 7, 11, 13][pi];
        prop_assume!((n * m) % p != 0 && t % p as i64 > 1);
        let spec = HGCurveSpec::new(n, m, p, t).unwrap();
        let g = spec.genus() as i128;
        for e in 1..=2 {
            let q = (p as i128).pow(e);
            let dev = count_hg_curve(&spec, e).unwrap() as i128 - q - 1;
            prop_assert!(dev * dev <= 4 * g * g * q);
        }
    }

    #[test]
    fn unit_root_comparison_ignores_order(pi in 0usize..2, t in 2i64..7) {
        let p = [7u64, 13][pi];
        let spec = HGCurveSpec::new(2, 3, p, t).unwrap();
        match verify_hg_unit_roots(&spec, 3, false) {
            Ok(rep) => {
                let mut rev = rep.series_values.clone();
                rev.reverse();
                let u = padic_hg::padic::hensel::poly_from_roots(&rev, rep.unit_root_factor[0].like(0));
                prop_assert_eq!(u == rep.unit_root_factor, rep.verdict == Verdict::Match);
            }
            Err(e) => {
                let gate = matches!(e, Error::NotOrdinary { .. });
                prop_assert!(gate, "{}", e);
            }
        }
    }
}

#[test]
fn reports_round_trip_through_json() {
    let rep = verify_hg_unit_roots(&HGCurveSpec::new(2, 3, 7, 3).unwrap(), 4, false).unwrap();
    let text = serde_json::to_string(&rep).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["spec", "counts", "zeta_coeffs", "unit_roots", "series_values", "verdict"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["verdict"], "match");
    let back: padic_hg::curves::HGUnitRootReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, rep);
}
