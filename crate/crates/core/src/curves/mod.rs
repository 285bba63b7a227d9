//! Point counting over finite fields, zeta numerators, and the unit-root
//! comparisons with hypergeometric series values.

pub mod conjecture;
pub mod elliptic;
pub mod ff;
pub mod hgcurve;
pub mod legendre;
pub mod unitroot;
pub mod zeta;

pub use conjecture::{conjecture_lhs, nonvanishing, ConjectureValue, Family, NonvanishingEntry, NonvanishingReport};
pub use ff::FiniteField;
pub use hgcurve::{count_hg_curve, HGCurveSpec};
pub use legendre::{count_legendre, verify_dwork_unit_root, DworkUnitRootReport, LegendreCount, LegendreCurve};
pub use unitroot::{component_scalar, frobenius_prefactor, verify_hg_unit_roots, Component, HGUnitRootReport, Verdict};
pub use zeta::{is_ordinary, predicted_count, unit_roots, zeta_from_counts, zeta_numerator, UnitRoots, ZetaNumerator};
